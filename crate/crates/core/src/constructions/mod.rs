//! Face-quasiprimitive families: affine (HA), twisted wreath (TW) and almost
//! simple (AS) smooth coverings of unicellular dessins, plus the product
//! action (PA) examples.

mod almost_simple;
mod ha;
mod wreath_types;

pub use almost_simple::{construct_as, AsConstruction, AsWitness};
pub use ha::{
    construct_ha, ha_covering, ha_enumerate, ha_frobenius_semiregular, ha_group, ha_isomorphic, ha_primitivity,
    HaClass, HaEnumeration, HaParams,
};
pub use wreath_types::{
    a5_with_generators, construct_pa, construct_tw, PaConstruction, PaReport, TwCertificate, TwConstruction,
};
