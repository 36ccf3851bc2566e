use thiserror::Error;

/// Errors surfaced by the solvers and the run pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("datum has no negative slope anywhere: no blowup")]
    NoBlowup,

    #[error("time {t} is at or past the blowup time {t_star}")]
    PastBlowup { t: f64, t_star: f64 },

    #[error("time {t} is at or before the blowup time {t_star}; continuation needs t > T*")]
    BeforeBlowup { t: f64, t_star: f64 },

    #[error("vacuum state: w - z = {wz} is not positive")]
    Vacuum { wz: f64 },

    #[error("entropy violation: left trace {left} <= right trace {right}")]
    EntropyViolation { left: f64, right: f64 },

    #[error("self-similar map needs tau > t, got tau = {tau}, t = {t}")]
    TimeNotBeforeTau { tau: f64, t: f64 },

    #[error("W_xxx(0,s) = {value} is below the operational floor {floor}")]
    DegenerateThirdDerivative { value: f64, floor: f64 },

    #[error("tau_dot = {value} >= 1: time parametrization lost")]
    TimeParametrizationLost { value: f64 },

    #[error("transport bound needs lambda_D != lambda_F, both are {lambda}")]
    DegenerateTransportBound { lambda: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("numerical stage `{stage}` failed: {reason}")]
    Stage { stage: String, reason: String },

    #[error("blowup fit rejected: R^2 = {r2} < 0.99")]
    FitQuality { r2: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
