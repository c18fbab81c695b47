use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("pattern has {pattern} vertices but {locals} local graphs were given")]
    PatternLengthMismatch { locals: usize, pattern: usize },

    #[error("DIMACS parse error at line {line}: {msg}")]
    Dimacs { line: usize, msg: String },

    #[error("brute force guard: graph on {n} vertices exceeds limit {limit} (pass an override to enumerate anyway)")]
    BruteForceGuard { n: usize, limit: usize },

    #[error("parameter k={k} out of range for graph on {n} vertices")]
    KOutOfRange { k: usize, n: usize },

    #[error("parameter {name}={value} must be at least {min}")]
    ParameterTooSmall { name: &'static str, value: usize, min: usize },

    #[error("no N <= {cap} forces a {k}-homogeneous set in every graph")]
    CapExceeded { k: usize, cap: usize },

    #[error("exhaustive enumeration of graphs on {n} vertices ({pairs} vertex pairs) exceeds the scale guard")]
    EnumerationScaleGuard { n: usize, pairs: usize },

    #[error("exact Ramsey table insufficient for t={t}: largest gap R(l+1) > R(l)+t it certifies is t={max_t}; use the turan strategy for larger t")]
    TableInsufficient { t: usize, max_t: usize },

    #[error("graph is not a Ramsey witness for k={k}: it contains a {k}-clique or {k}-independent set")]
    NotRamseyWitness { k: usize },

    #[error("witness graph has {n} vertices but the cover extraction needs at least {required}")]
    WitnessTooSmall { n: usize, required: usize },

    #[error("cover extraction stalled: no size-{ell} clique or independent set among the uncovered vertices")]
    CoverStalled { ell: usize },

    #[error("random host search exhausted {trials} trials without an accepted sample")]
    TrialsExhausted { trials: usize },

    #[error("instance list is empty")]
    EmptyInstances,

    #[error("instances carry mixed parameter values ({a} vs {b})")]
    MixedParameters { a: usize, b: usize },

    #[error("{t} instances exceed the host graph's {host} vertices")]
    TooManyInstances { t: usize, host: usize },

    #[error("instance {index} is not a legal refinement instance: {reason}")]
    IllegalInstance { index: usize, reason: String },

    #[error("host graph invalid: {0}")]
    HostInvalid(String),

    #[error("instance generation exhausted its retry budget of {budget} samples (n={n}, k={k}, target={target})")]
    RetryBudgetExhausted { budget: usize, n: usize, k: usize, target: String },

    #[error("Paley graphs need a prime q = 1 (mod 4); got q={q}")]
    BadPaleyModulus { q: usize },

    #[error("composed graph on {vertices} vertices exceeds the verification feasibility cap {cap}")]
    FeasibilityCap { vertices: usize, cap: usize },

    #[error("small-k fast path requires k in {{1, 2}}; got k={k}")]
    NotSmallK { k: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
