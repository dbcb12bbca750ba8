mod props;

macro_rules! prop_tests {
    ($($name:ident),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                if let Err(e) = props::$name() {
                    panic!("{e}");
                }
            }
        )*
    };
}

prop_tests!(
    d_squared_is_zero,
    action_stays_in_cocycles,
    action_matches_group_law,
    admissibility_is_invariant,
    lambda_is_a_homomorphism,
    lambda_kernel_is_plus_minus_one,
    signature_is_a_congruence_invariant,
    extraction_round_trip,
);

#[test]
fn suite_is_complete() {
    assert_eq!(props::ALL.len(), 8);
}
