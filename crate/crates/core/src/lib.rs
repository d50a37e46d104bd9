//! Deterministic scoring engine for NL2SQL reinforcement learning.
//!
//! The crate computes a hybrid reward over model rollouts: format and
//! grammar gates, a soft length penalty, and a task-adaptive accuracy
//! term that switches between embedding similarity for natural-language
//! answers and execution matching (with an AST/dense-result fallback)
//! for SQL answers. Group-relative advantage math and the deterministic
//! data-mutation operators used to build training corpora live here too.
//!
//! Modules map onto the major subsystems:
//!
//! - [`sql_ast`] — SQL parsing, canonical component flattening, `S_ast`
//! - [`exec`] — embedded fixture database, execution, `M_exec`
//! - [`dense`] — dense result matching (`S_schema`/`S_rows`/`S_values`)
//! - [`semsim`] — embedding providers, cosine, NL accuracy step function
//! - [`reward`] — per-sample reward breakdown and the weighted total
//! - [`grpo`] — group advantage normalization and surrogate objective
//! - [`mutation`] — template instantiation, error injection, degenerate
//!   dimension rewriting, consistency verification

pub mod dense;
pub mod exec;
pub mod grpo;
pub mod mutation;
pub mod reward;
pub mod semsim;
pub mod sql_ast;

pub use dense::{align_schemas, s_dense, s_rows, s_schema, s_values, AlignmentPlan, DenseWeights};
pub use exec::{
    execute, load_fixture, m_exec, syntax_check, Cell, DatabaseFixture, ExecOutcome, ExecStatus,
    ResourceLimits, ResultTable, TableDef,
};
pub use grpo::{advantages, objective, surrogate_term, GrpoParams, RolloutGroup};
pub use reward::{
    classify_modality, extract_answer, r_fmt, r_gram, r_len, score, AccBranch, Modality,
    RewardBreakdown, RewardConfig, TaskCategory, TaskSample,
};
pub use semsim::{cosine, r_acc_nl, EmbeddingProvider, EmbeddingVector, NlAccThresholds};
pub use sql_ast::{
    ast_equal, flatten, parse, s_ast, ClauseTag, ComponentKind, SqlComponentSet, SqlQuery,
    TaggedComponent,
};
