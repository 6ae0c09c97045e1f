//! `(p, q)`-colourings, the circular chromatic number, alternating complete
//! bipartite witnesses, and the colour-class separation check.

mod pq;
mod zhu;
mod zigzag;

pub use pq::{
    candidate_fractions, circular_chromatic_number, find_pq_colouring, is_pq_colouring,
    CircularChromatic, Fraction, PQColouring,
};
pub use zhu::{enumerate_colourings, zhu_hypothesis_check, ZhuReport};
pub use zigzag::{random_proper_colouring, verify_zigzag, zigzag_witness, ZigzagWitness};
