//! Shared helpers for the integration suites: an enumeration-based
//! kernel/cokernel oracle that never touches the Smith normal form path, and
//! seeded random matrix generation.

use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::Rng;
use sphere_tdual::fgab::{AbelianGroup, IntMatrix};
use std::collections::{HashSet, VecDeque};

/// Half-width of the lattice-point enumeration box. Column entries are
/// bounded by 4, so any target with max-norm <= 104 is reachable through the
/// box by a Steinitz reordering of its generator decomposition.
const BOX: i64 = 128;

pub fn random_matrix(rng: &mut StdRng, max_dim: usize, max_entry: i64) -> IntMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let entries: Vec<i64> = (0..rows * cols)
        .map(|_| rng.gen_range(-max_entry..=max_entry))
        .collect();
    IntMatrix::from_i64(rows, cols, &entries)
}

fn columns_i64(f: &IntMatrix) -> Vec<Vec<i64>> {
    (0..f.cols())
        .map(|j| {
            (0..f.rows())
                .map(|i| f.at(i, j).to_i64().expect("oracle needs small entries"))
                .collect()
        })
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// All points of the column lattice inside the enumeration box, by closure
/// under generator steps that stay inside the box.
fn lattice_points(cols: &[(i64, i64)]) -> HashSet<(i64, i64)> {
    let mut gens = Vec::new();
    for &(x, y) in cols {
        if (x, y) != (0, 0) {
            gens.push((x, y));
            gens.push((-x, -y));
        }
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert((0i64, 0i64));
    queue.push_back((0i64, 0i64));
    while let Some((x, y)) = queue.pop_front() {
        for &(dx, dy) in &gens {
            let p = (x + dx, y + dy);
            if p.0.abs() <= BOX && p.1.abs() <= BOX && seen.insert(p) {
                queue.push_back(p);
            }
        }
    }
    seen
}

fn order_in_quotient(lattice: &HashSet<(i64, i64)>, v: (i64, i64)) -> i64 {
    for m in 1..=96 {
        if lattice.contains(&(m * v.0, m * v.1)) {
            return m;
        }
    }
    panic!("coset order not found within the enumeration bound");
}

/// Kernel and cokernel of `f : Z^a -> Z^b` for `b <= 2` and entries bounded
/// by 4, computed by coset enumeration and elementary arithmetic only.
pub fn kernel_cokernel_by_enumeration(f: &IntMatrix) -> (AbelianGroup, AbelianGroup) {
    assert!(f.rows() <= 2, "oracle supports at most two rows");
    let cols = columns_i64(f);
    match f.rows() {
        0 => (AbelianGroup::free(f.cols()), AbelianGroup::zero()),
        1 => {
            let g = cols.iter().fold(0i64, |acc, c| gcd(acc, c[0]));
            let rank_image = usize::from(g != 0);
            (
                AbelianGroup::free(f.cols() - rank_image),
                AbelianGroup::cyclic(g),
            )
        }
        2 => {
            let pairs: Vec<(i64, i64)> = cols.iter().map(|c| (c[0], c[1])).collect();
            let nonzero: Vec<(i64, i64)> =
                pairs.iter().copied().filter(|&p| p != (0, 0)).collect();
            let full_rank = nonzero
                .iter()
                .any(|&(ax, ay)| nonzero.iter().any(|&(bx, by)| ax * by - ay * bx != 0));

            if nonzero.is_empty() {
                return (AbelianGroup::free(f.cols()), AbelianGroup::free(2));
            }
            if !full_rank {
                // all columns are multiples of one primitive vector
                let (x, y) = nonzero[0];
                let d = gcd(x, y);
                let w = (x / d, y / d);
                let mut g = 0i64;
                for &(cx, cy) in &nonzero {
                    let k = if w.0 != 0 { cx / w.0 } else { cy / w.1 };
                    assert_eq!((k * w.0, k * w.1), (cx, cy), "columns must be parallel");
                    g = gcd(g, k);
                }
                return (
                    AbelianGroup::free(f.cols() - 1),
                    fgab_sum(AbelianGroup::free(1), AbelianGroup::cyclic(g)),
                );
            }

            let lattice = lattice_points(&pairs);
            let ord_x = order_in_quotient(&lattice, (1, 0));
            let ord_y = order_in_quotient(&lattice, (0, 1));
            let exponent = ord_x / gcd(ord_x, ord_y) * ord_y;
            assert!(exponent <= 64, "exponent exceeds the enumeration budget");

            // count cosets among the grid representatives [0, exponent)^2
            let mut reps: Vec<(i64, i64)> = Vec::new();
            for x in 0..exponent {
                for y in 0..exponent {
                    let fresh = !reps
                        .iter()
                        .any(|&(rx, ry)| lattice.contains(&(x - rx, y - ry)));
                    if fresh {
                        reps.push((x, y));
                    }
                }
            }
            let order = reps.len() as i64;
            assert_eq!(order % exponent, 0, "oracle inconsistency");
            let d1 = order / exponent;
            assert_eq!(exponent % d1, 0, "oracle inconsistency");
            (
                AbelianGroup::free(f.cols() - 2),
                AbelianGroup::new(0, [d1, exponent]),
            )
        }
        _ => unreachable!(),
    }
}

fn fgab_sum(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup {
    sphere_tdual::fgab::direct_sum(&[a, b])
}
