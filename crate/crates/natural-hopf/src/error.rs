use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{name}` expects {expected} children, got {found}")]
    ChildCount {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("generator `{name}` accepts at most {arity} children, got {found}")]
    TooManyChildren {
        name: String,
        arity: usize,
        found: usize,
    },
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("expected {expected} arguments, got {found}")]
    ArgumentCount { expected: usize, found: usize },
    #[error("index {index} is outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("node {index} does not exist (forest has {degree} internal nodes)")]
    NodeOutOfRange { index: usize, degree: usize },
    #[error("signature is not binary")]
    NotBinary,
    #[error("decorated word is not packed")]
    NotPacked,
    #[error("multiset is not the content of any term")]
    InvalidMultiset,
    #[error("polynomial has no unique minimum-weight monomial")]
    NoLeadingMonomial,
    #[error("letter {0} is not part of the target alphabet")]
    LetterOutOfRange(String),
    #[error("labels do not describe a forest: {0}")]
    InvalidPositions(String),
}
