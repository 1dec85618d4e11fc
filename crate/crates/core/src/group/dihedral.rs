use super::{element_order, subgroup_generated, GroupTable};

/// Returns `n` when `g` is isomorphic to the dihedral group of order `2n`.
///
/// Searches for `r` of order `n` and an involution `s` outside `<r>` with
/// `s r s^-1 = r^-1` generating the whole group. The order-2 group is `n = 1`.
pub fn recognize_dihedral(g: &GroupTable) -> Option<usize> {
    let order = g.order();
    if order == 2 {
        return Some(1);
    }
    if order < 2 || order % 2 == 1 {
        return None;
    }
    let n = order / 2;
    let orders: Vec<u64> = (0..order).map(|x| element_order(g, x)).collect();
    let involutions: Vec<usize> = (0..order).filter(|&x| orders[x] == 2).collect();
    // D_2n has n reflections, plus the central r^(n/2) when n is even
    if involutions.len() != n + (n + 1) % 2 {
        return None;
    }
    for r in (0..order).filter(|&x| orders[x] == n as u64) {
        let rot = subgroup_generated(g, &[r]);
        let mut in_rot = vec![false; order];
        rot.iter().for_each(|&x| in_rot[x] = true);
        let r_inv = g.inv(r);
        for &s in &involutions {
            if in_rot[s] {
                continue;
            }
            // s is an involution, so s^-1 = s
            if g.mul(g.mul(s, r), s) != r_inv {
                continue;
            }
            if subgroup_generated(g, &[r, s]).len() == order {
                return Some(n);
            }
        }
    }
    None
}
