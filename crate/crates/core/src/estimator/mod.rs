//! Search and integration engines: hyperbolic Schwarzian norms, convexity
//! order certificates and radial quadrature.

mod quadrature;
mod search;

pub use quadrature::{integrate, radial_quadrature, QuadratureOptions, QuadratureResult, DEFAULT_MAX_DEPTH};
pub use search::{
    certify_order, certify_order_with, grid_extremum, sup_hyperbolic_pre_schwarzian, sup_hyperbolic_schwarzian,
    sup_hyperbolic_schwarzian_with, GridPoint, NormEstimate, OrderCertificate, PolarGrid, SearchOptions,
    DEFAULT_R_MAX,
};
