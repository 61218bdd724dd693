//! Checks at full GF(2^16) scale.

use novelpoly::{closed_form_counts, Basis, CoeffVec, Elem, ErasurePattern, Field, OpCounter, ReedSolomon};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn transform_counts_follow_closed_forms() {
    let bt = Basis::new(Field::gf65536(), 4096).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for lg in 1..=12 {
        let h = 1usize << lg;
        let d = CoeffVec((0..h).map(|_| Elem(rng.gen())).collect());
        let (_, zero) = bt.forward_counted(&d, 0).unwrap();
        assert_eq!(zero, closed_form_counts(h, true), "h={h} l=0");
        for l in [h, 3 * h, rng.gen_range(h..1 << 16)] {
            let (ev, general) = bt.forward_counted(&d, l).unwrap();
            assert_eq!(general, closed_form_counts(h, false), "h={h} l={l}");
            let (back, inv) = bt.inverse_counted(&ev).unwrap();
            assert_eq!(inv, general);
            assert_eq!(back, d);
        }
    }
}

#[test]
fn small_nonzero_shift_never_exceeds_general_count() {
    // Shifts below h skip the butterflies whose block offset equals the shift.
    let bt = Basis::new(Field::gf65536(), 256).unwrap();
    let d = CoeffVec(vec![Elem(1); 256]);
    for l in 1..256 {
        let (_, ops) = bt.forward_counted(&d, l).unwrap();
        let general: OpCounter = closed_form_counts(256, false);
        assert!(ops.adds <= general.adds && ops.muls <= general.muls);
        assert!(ops.adds >= closed_form_counts(256, true).adds);
    }
}

#[test]
fn half_rate_round_trip() {
    let rs = ReedSolomon::new(Field::gf65536(), 1 << 15).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let message: Vec<Elem> = (0..1 << 15).map(|_| Elem(rng.gen())).collect();
    let cw = rs.encode(&message).unwrap();
    let mut positions: Vec<usize> = (0..1 << 16).collect();
    positions.shuffle(&mut rng);
    let pattern = ErasurePattern::from_positions(1 << 16, &positions[..1 << 15]).unwrap();
    assert_eq!(rs.decode(&cw, &pattern).unwrap(), message);
}
