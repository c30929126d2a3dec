use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("undeclared generator `{symbol}` at byte {position}")]
    UndeclaredGenerator { symbol: String, position: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("group order {order} exceeds the configured maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("coset enumeration exceeded its limits ({live} live cosets, {total} defined in total)")]
    CosetLimit { live: usize, total: usize },

    #[error("coset table is incomplete")]
    IncompleteTable,

    #[error("{0} is not a normal subgroup")]
    NotNormal(String),

    #[error("elements do not generate the group (closure has order {closure} of {order})")]
    NotGenerating { closure: usize, order: usize },

    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: String, found: String },

    #[error("no generating set with at most {0} elements")]
    TooManyGenerators(usize),

    #[error("unknown group family `{0}`")]
    UnknownFamily(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }
}
