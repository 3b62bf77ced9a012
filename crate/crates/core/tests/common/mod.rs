#![allow(dead_code)]

use sperner::poset::Poset;

/// `a < c`, `b < c`, `b < d`.
pub fn n_poset() -> Poset {
    Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap()
}

/// Bottom, two middles, top, plus an element above the top.
pub fn diamond_with_tail() -> Poset {
    Poset::from_covers(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
}

/// Small posets exercised across suites.
pub fn test_posets() -> Vec<(&'static str, Poset)> {
    vec![
        ("singleton", Poset::singleton()),
        ("chain1", Poset::chain(1)),
        ("chain2", Poset::chain(2)),
        ("chain3", Poset::chain(3)),
        ("chain4", Poset::chain(4)),
        ("antichain2", Poset::antichain(2)),
        ("antichain3", Poset::antichain(3)),
        ("V", Poset::v()),
        ("W", Poset::w()),
        ("dual V", Poset::v().dual()),
        ("dual W", Poset::w().dual()),
        ("Pow(2)", Poset::powerset(2).unwrap()),
        ("Pow(3)", Poset::powerset(3).unwrap()),
        ("2V", Poset::v().cardinal_sum(2).unwrap()),
        ("N", n_poset()),
        ("diamond+tail", diamond_with_tail()),
    ]
}
