use crate::error::Result;
use crate::fairness::nash_score;
use crate::instance::{Allocation, Instance};
use crate::oracle::enumerate_allocations;

/// Brute-force maximum Nash welfare: most agents with positive value, then the
/// largest product of those values. The first maximizer in radix order wins.
pub fn max_nash_welfare(inst: &Instance) -> Result<Allocation> {
    let mut best: Option<(Allocation, _)> = None;
    for a in enumerate_allocations(inst.n(), inst.m())? {
        let score = nash_score(inst, &a);
        if best.as_ref().is_none_or(|(_, s)| score > *s) {
            best = Some((a, score));
        }
    }
    Ok(best.expect("at least one allocation exists").0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::Bundle;
    use crate::fairness::{is_mef1, is_prop1};
    use crate::value::Value;

    #[test]
    fn diagonal_wins() {
        let inst = Instance::additive(&[vec![3, 1], vec![1, 3]]).unwrap();
        let a = max_nash_welfare(&inst).unwrap();
        assert_eq!(a, Allocation::from_lists(2, &[&[0], &[1]]));
        let s = nash_score(&inst, &a);
        assert_eq!((s.count_positive, s.product_positive), (2, Value::int(9)));
        assert!(is_prop1(&inst, &a) && is_mef1(&inst, &a));
    }

    #[test]
    fn single_agent() {
        let inst = Instance::additive(&[vec![2, 5]]).unwrap();
        assert_eq!(max_nash_welfare(&inst).unwrap().bundle(0), Bundle::full(2));
    }

    #[test]
    fn ties_go_to_first_in_radix_order() {
        let inst = Instance::additive(&[vec![1, 1], vec![1, 1]]).unwrap();
        // Radix order: (01|-), (1|0), (0|1), (-|01); the two splits tie.
        assert_eq!(
            max_nash_welfare(&inst).unwrap(),
            Allocation::from_lists(2, &[&[1], &[0]])
        );
    }
}
