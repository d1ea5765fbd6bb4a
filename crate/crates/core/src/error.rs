use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid simple type: series {series} with rank {rank}")]
    InvalidSimpleType { series: char, rank: usize },

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("element shape mismatch: {0}")]
    ElementShape(String),

    #[error("kernel generator error: {0}")]
    KernelGenerator(String),

    #[error("torus component of kernel generator is not in the image of the compact part: {0}")]
    TorusLiftOutsideCompact(String),

    #[error("level does not descend: quadratic form is nonzero on the lifted kernel")]
    LevelDoesNotDescend,

    #[error("inconsistent cocycle: {0}")]
    InconsistentCocycle(String),

    #[error("spec validation error at {field}: {message}")]
    SpecValidation { field: String, message: String },

    #[error("spec syntax error: {0}")]
    SpecSyntax(String),
}

pub type Result<T> = std::result::Result<T, Error>;
