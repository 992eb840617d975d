//! Published starter blocks and best sequencings.

pub(crate) struct CyclicRow {
    pub id: &'static str,
    pub v: usize,
    pub starters: &'static [[u8; 3]],
    pub printed: &'static str,
    /// Values the printed string actually attains.
    pub printed_linear: usize,
    pub printed_cyclic: usize,
    pub claim_linear: usize,
    pub claim_cyclic: usize,
    /// Witnesses for claims the printed string does not reach.
    pub computed: &'static [(&'static str, usize, usize)],
}

pub(crate) const CYCLIC_19: &[CyclicRow] = &[
    CyclicRow {
        id: "A1",
        v: 19,
        starters: &[[0, 1, 4], [0, 2, 9], [0, 5, 11]],
        printed: "02468acegi13579bdfh",
        printed_linear: 6,
        printed_cyclic: 6,
        claim_linear: 6,
        claim_cyclic: 6,
        computed: &[],
    },
    CyclicRow {
        id: "A2",
        v: 19,
        starters: &[[0, 1, 4], [0, 2, 12], [0, 5, 13]],
        printed: "02468acegi13579bdfh",
        printed_linear: 6,
        printed_cyclic: 6,
        claim_linear: 6,
        claim_cyclic: 6,
        computed: &[],
    },
    CyclicRow {
        id: "A3",
        v: 19,
        starters: &[[0, 1, 8], [0, 2, 5], [0, 4, 10]],
        printed: "013475egb8fhc9d2ia6",
        printed_linear: 6,
        printed_cyclic: 3,
        claim_linear: 6,
        claim_cyclic: 5,
        computed: &[("0a39gdh1256487cbeif", 5, 5)],
    },
    CyclicRow {
        id: "A4",
        v: 19,
        starters: &[[0, 1, 8], [0, 2, 5], [0, 4, 13]],
        printed: "013457di8bc9fhg2ea6",
        printed_linear: 6,
        printed_cyclic: 2,
        claim_linear: 6,
        claim_cyclic: 5,
        computed: &[("0a39ie612c5hfd4b78g", 5, 5)],
    },
];

pub(crate) const CYCLIC_21: &[CyclicRow] = &[
    CyclicRow {
        id: "C1",
        v: 21,
        starters: &[[0, 1, 3], [0, 4, 12], [0, 5, 11]],
        printed: "012567ac3j4fkdb8ighe9",
        printed_linear: 6,
        printed_cyclic: 6,
        claim_linear: 6,
        claim_cyclic: 6,
        computed: &[],
    },
    CyclicRow {
        id: "C2",
        v: 21,
        starters: &[[0, 1, 3], [0, 4, 12], [0, 5, 15]],
        printed: "01hfadj9i5gk6c42b783e",
        printed_linear: 7,
        printed_cyclic: 3,
        claim_linear: 7,
        claim_cyclic: 6,
        computed: &[("05dhk3714agbc68if9e2j", 6, 6)],
    },
    CyclicRow {
        id: "C3",
        v: 21,
        starters: &[[0, 1, 5], [0, 2, 10], [0, 3, 9]],
        printed: "01234deacf7hji8596bkg",
        printed_linear: 6,
        printed_cyclic: 6,
        claim_linear: 6,
        claim_cyclic: 6,
        computed: &[],
    },
    CyclicRow {
        id: "C4",
        v: 21,
        starters: &[[0, 1, 5], [0, 2, 10], [0, 3, 15]],
        printed: "012349ak78jfbich56egd",
        printed_linear: 6,
        printed_cyclic: 6,
        claim_linear: 6,
        claim_cyclic: 6,
        computed: &[],
    },
    CyclicRow {
        id: "C5",
        v: 21,
        starters: &[[0, 1, 5], [0, 2, 13], [0, 3, 9]],
        printed: "01234bck7adf86hi59egj",
        printed_linear: 6,
        printed_cyclic: 6,
        claim_linear: 6,
        claim_cyclic: 6,
        computed: &[],
    },
    CyclicRow {
        id: "C6",
        v: 21,
        starters: &[[0, 1, 9], [0, 2, 5], [0, 4, 10]],
        printed: "0123489afgjhdc675ibke",
        printed_linear: 6,
        printed_cyclic: 6,
        claim_linear: 6,
        claim_cyclic: 6,
        computed: &[],
    },
    CyclicRow {
        id: "C7",
        v: 21,
        starters: &[[0, 1, 9], [0, 2, 5], [0, 4, 15]],
        printed: "0123489ig5cb7h6aejfkd",
        printed_linear: 6,
        printed_cyclic: 6,
        claim_linear: 6,
        claim_cyclic: 6,
        computed: &[],
    },
];

/// Sequencings of the PG(3,2) labelling used by `projective_system(4)`.
pub(crate) const PG15_KNOWN: &[(&str, usize, usize)] = &[("12e573469bd08ac", 5, 3), ("02765b41e89adc3", 4, 4)];

/// Listing indices (1-based) whose best cyclic value is 4 rather than 5.
pub(crate) const STS15_NOT_CYCLIC_5: [usize; 9] = [1, 2, 3, 4, 5, 6, 7, 14, 16];

/// Best sequencings of STS(15) #1..#80, in listing order.
pub(crate) const STS15_SEQUENCINGS: [&str; 80] = [
    "04579aed283b16c",
    "023758419cd6eba",
    "023758419dc6bea",
    "023758419dc6eba",
    "073529a6edbc841",
    "073528b1c9ade46",
    "0237584d6e9b1ac",
    "037528194ebdc6a",
    "057329418eb6dca",
    "053728169be4dca",
    "037528169be4cda",
    "081637a94ceb25d",
    "057328196becd4a",
    "0275384cde9a1b6",
    "037258194dcbe6a",
    "07352cb19aed846",
    "0a2756e43b198cd",
    "06937421eab5d8c",
    "04926b1c78d3a5e",
    "0714589a6ceb23d",
    "082537c6a9e1b4d",
    "038527b14ae9d6c",
    "052394ade8b617c",
    "084512cb7e9d36a",
    "0145786a2dbe3c9",
    "04517863aceb92d",
    "0725384cbae916d",
    "045926abcd83e17",
    "09746a8c5d12e3b",
    "0275386d19ca4be",
    "07415829abde36c",
    "023954c718de6ab",
    "07145829abdc63e",
    "07145829abdc36e",
    "01639a472ced5b8",
    "01549a682bde3c7",
    "05914ca78e26d3b",
    "0425916d83b7ace",
    "07316829adbe45c",
    "092456adbc7318e",
    "0467258deba31c9",
    "0475186dec93ab2",
    "028697d5bc413ae",
    "05194a36db7c28e",
    "0254763e1b9ac8d",
    "04627c1839ea5bd",
    "03716859adb42ec",
    "057298de6c34b1a",
    "02457e3619cab8d",
    "071542d3b8ac96e",
    "04591a6e38c7bd2",
    "017638429ecbd5a",
    "017638429ecbd5a",
    "061738492ec5dba",
    "0593261c78da4eb",
    "035294ed68cb17a",
    "082391a45db7ec6",
    "0593261c78da4eb",
    "02495aedc83176b",
    "05841ed9a7b6c32",
    "05418a2cbe6d379",
    "0571483c6e9ad2b",
    "02735b6de8914ac",
    "0258417deba6c93",
    "05741d3e9ac68b2",
    "04726853cae9b1d",
    "0145783ce29d6ab",
    "095246eabc7831d",
    "0328647dc9b1a5e",
    "054279abc6d138e",
    "042758c3de91b6a",
    "04725619b3ec8da",
    "01457839e2cd6ab",
    "01367852dac94eb",
    "04581263adb79ec",
    "04517a62d3ce9b8",
    "0425761c39dea8b",
    "084157bceda2369",
    "085326de7c9b41a",
    "0732658bcd94e1a",
];
