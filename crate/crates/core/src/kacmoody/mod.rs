//! Symmetrizable Kac-Moody algebras and their integrable highest-weight
//! modules `L(Λ)`, built to a finite depth below `Λ`.

mod cone;
mod freudenthal;
mod gcm;
mod group;
mod irr;

pub use cone::{kostant_cone_test, CartanComponent};
pub use freudenthal::{freudenthal_oracle, freudenthal_table, root_multiplicities};
pub use gcm::{validate_gcm, Gcm};
pub use group::{
    act_km_group, exp_action, multibracket_rootvector, peter_weyl_rank, theta_eval, Coweight, ExpGenerator,
    KmCoefficient, KmFactor, KmGroupWord, RootVector,
};
pub use irr::{
    build_irr_trunc, total_depth, weight_multiplicity, Chevalley, Depth, IrrTrunc, KmVector, DEFAULT_DEPTH_CAP,
    DEFAULT_KM_DIM_CAP,
};
