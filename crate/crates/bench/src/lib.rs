//! Shared builders for the benchmark suite.

use apgroups::families::{build_family, dihedral, FamilyId};
use apgroups::GroupTable;

pub fn d60() -> GroupTable {
    dihedral(30)
}

pub fn a5() -> GroupTable {
    build_family(&FamilyId::parse("alternating:5").unwrap()).unwrap()
}

pub fn l2_7() -> GroupTable {
    build_family(&FamilyId::parse("psl2:7").unwrap()).unwrap()
}

pub fn d6xd6() -> GroupTable {
    let d6 = dihedral(3);
    GroupTable::direct_product(&d6, &d6).unwrap()
}
