//! The quintic invariant table, d = 1 … 5, as exact strings.

/// Columns: GW τ₁(x)/d, SQ τ₀(x²), SQ τ₁(x)/d, −SQ τ₂(1)/2.
///
/// The d = 3 entry of the last column is 175851761875/108. The published
/// table prints 175851761875/27; the recomputation here and an independent
/// one agree on /108, and the other nineteen entries match the print.
pub const TABLE1_GOLDEN: [[&str; 4]; 5] = [
    ["2875", "3850", "2875", "2875"],
    ["4876875/8", "3589125", "19660875/8", "13731875/8"],
    ["8564575000/27", "16126540000/3", "76579948750/27", "175851761875/108"],
    ["15517926796875/64", "19736572853125/2", "801135363990625/192", "1123498525946875/576"],
    ["229305888887648", "20310770587807020", "14274970288322171/2", "125303832133435229/48"],
];

/// The entries exactly as published, including the d = 3 misprint.
pub const TABLE1_PUBLISHED: [[&str; 4]; 5] = [
    ["2875", "3850", "2875", "2875"],
    ["4876875/8", "3589125", "19660875/8", "13731875/8"],
    ["8564575000/27", "16126540000/3", "76579948750/27", "175851761875/27"],
    ["15517926796875/64", "19736572853125/2", "801135363990625/192", "1123498525946875/576"],
    ["229305888887648", "20310770587807020", "14274970288322171/2", "125303832133435229/48"],
];
