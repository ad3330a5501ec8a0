use super::SchurExpansion;
use crate::error::Result;
use crate::partition::Partition;

/// Shapes `mu` containing `lambda` with `mu/lambda` a horizontal strip of `k` cells,
/// i.e. `lambda_i <= mu_i` and `mu_{i+1} <= lambda_i`.
fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    fn go(lambda: &Partition, row: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            let mut parts = cur.clone();
            parts.extend(lambda.parts().iter().skip(row));
            out.push(Partition::new(parts).expect("strips keep rows decreasing"));
            return;
        }
        if row > lambda.len() {
            return;
        }
        let cap = if row == 0 { rest } else { (lambda[row - 1] - lambda[row]).min(rest) };
        for add in 0..=cap {
            cur.push(lambda[row] + add);
            go(lambda, row + 1, rest - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

/// `s_lambda * s_(k)`: one term per horizontal strip of size `k` added to `lambda`.
pub fn pieri_row(lambda: &Partition, k: usize) -> Result<SchurExpansion> {
    SchurExpansion::from_terms(lambda.size() + k, horizontal_strips(lambda, k).into_iter().map(|p| (p, 1)))
}

/// `s_lambda * s_(1^k)`: one term per vertical strip of size `k` added to `lambda`.
pub fn pieri_col(lambda: &Partition, k: usize) -> Result<SchurExpansion> {
    let strips = horizontal_strips(&lambda.conjugate(), k);
    SchurExpansion::from_terms(lambda.size() + k, strips.into_iter().map(|p| (p.conjugate(), 1)))
}
