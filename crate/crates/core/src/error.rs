use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("empty table")]
    Empty,
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("subset is not closed: {0}*{1} leaves it")]
    NotClosed(usize, usize),
    #[error("subset does not contain the identity")]
    MissingIdentity,
    #[error("subgroup is not normal: conjugating {element} by {conjugator} leaves it")]
    NotNormal { element: usize, conjugator: usize },
    #[error("map is not a homomorphism at ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("group of order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceError {
    #[error("additive and multiplicative tables have different sizes ({add} vs {mul})")]
    SizeMismatch { add: usize, mul: usize },
    #[error("identity of the additive group ({add}) differs from the multiplicative identity ({mul})")]
    IdentityMismatch { add: usize, mul: usize },
    #[error("compatibility fails at a={a}, b={b}, c={c}: a∘(bc) != (a∘b)a⁻¹(a∘c)")]
    CompatibilityFailure { a: usize, b: usize, c: usize },
    #[error("lambda_{0} is not an automorphism of the additive group")]
    NotAutomorphism(usize),
    #[error("lambda composition law fails at a={a}, b={b}")]
    CompositionLawFailure { a: usize, b: usize },
    #[error("lambda is not a homomorphism at a={a}, b={b}")]
    NotHomomorphism { a: usize, b: usize },
    #[error("lambda_{0} does not fix the identity")]
    IdentityNotFixed(usize),
    #[error("dual hypothesis fails at a={a}, b={b}, c={c}")]
    HypothesisFailure { a: usize, b: usize, c: usize },
    #[error("subset is not a sub-brace: {0}")]
    NotSubBrace(String),
    #[error("ideal condition fails: {0}")]
    NotIdeal(String),
    #[error("the additive group is not nilpotent")]
    AddNotNilpotent,
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("factorization is not exact: {0}")]
    NotExact(String),
    #[error("1-cocycle law fails at g={g}, h={h}")]
    CocycleLawFailure { g: usize, h: usize },
    #[error("action is invalid: {0}")]
    BadAction(String),
    #[error("matched pair axiom {tag} fails at {witness}")]
    MatchedPairFailure { tag: &'static str, witness: String },
    #[error("alpha_{0} is not a brace automorphism")]
    NotBraceAutomorphism(usize),
    #[error("not a permutation representation: {0}")]
    NotPermutationRep(String),
    #[error("triple factorization fails: {0}")]
    NotTriplyFactorized(String),
    #[error("gamma is undefined at {0}")]
    GammaUndefined(usize),
    #[error("brace matched pair fails {tag} at {witness}")]
    CompatibilityFailure { tag: &'static str, witness: String },
    #[error("double is undefined: lambda_a lambda_b != lambda_(lambda_a(b)) lambda_a at a={a}, b={b}")]
    DoubleUndefined { a: usize, b: usize },
    #[error(transparent)]
    Brace(#[from] BraceError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("unsupported field size {0}")]
    UnsupportedField(usize),
    #[error("structure constant index out of range: {0}")]
    BadStructureConstant(String),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("distributivity fails at ({0}, {1}, {2})")]
    NotDistributive(usize, usize, usize),
    #[error("subset is not closed under {op}: {a}, {b}")]
    NotClosed { op: &'static str, a: usize, b: usize },
    #[error("element {0} has no circle inverse (its powers do not vanish)")]
    NotCircleInvertible(usize),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("not a construction subgroup: (1+{0})·{1} leaves the subgroup")]
    NotConstructionSubgroup(usize, usize),
    #[error("carrier of size {size} exceeds the cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error(transparent)]
    Brace(#[from] BraceError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {order} exceeds the configured bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("no group catalogue for order {0}")]
    CatalogueMissing(usize),
    #[error("catalogue for order {order} is inconsistent: {msg}")]
    BadCatalogue { order: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("bad point `{0}` in cycle notation")]
    BadPoint(String),
    #[error("malformed cycle notation `{0}`")]
    BadCycle(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("skew cycle set axiom {tag} fails at ({a}, {b}, {c})")]
    CycleSetAxiomFailure { tag: &'static str, a: usize, b: usize, c: usize },
    #[error("matched pair axiom {0} fails")]
    MatchedPairAxiomFailure(String),
    #[error(transparent)]
    Brace(#[from] BraceError),
}

/// Crate-level error, used at API boundaries that mix several subsystems.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Equivalence(#[from] EquivalenceError),
    #[error(transparent)]
    Brace(#[from] BraceError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
