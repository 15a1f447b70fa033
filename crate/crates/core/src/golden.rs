//! Published reference values for n = 1..=11 and for p(22).

/// Partitions of n by number of parts different from 1; columns k = 0..=5.
pub const CLASSIFICATION: [[u64; 6]; 11] = [
    [1, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [1, 2, 0, 0, 0, 0],
    [1, 3, 1, 0, 0, 0],
    [1, 4, 2, 0, 0, 0],
    [1, 5, 4, 1, 0, 0],
    [1, 6, 6, 2, 0, 0],
    [1, 7, 9, 4, 1, 0],
    [1, 8, 12, 7, 2, 0],
    [1, 9, 16, 11, 4, 1],
    [1, 10, 20, 16, 7, 2],
];

/// A_n^beta for beta = 0..=4.
pub const A_TABLE: [[u64; 5]; 11] = [
    [1, 0, 0, 0, 0],
    [2, 0, 0, 0, 0],
    [3, 0, 0, 0, 0],
    [4, 1, 0, 0, 0],
    [5, 2, 0, 0, 0],
    [6, 4, 1, 0, 0],
    [7, 6, 2, 0, 0],
    [8, 9, 4, 1, 0],
    [9, 12, 7, 2, 0],
    [10, 16, 11, 4, 1],
    [11, 20, 16, 7, 2],
];

/// A_22^0 ..= A_22^10.
pub const P22_ADDENDS: [u64; 11] = [22, 100, 204, 241, 197, 125, 66, 30, 12, 4, 1];

pub const P22: u64 = 1002;

/// Arguments m of the A_m^1 summands of A_22^2, in printed order.
pub const A22_2_ARGS: [i64; 6] = [20, 17, 14, 11, 8, 5];

/// A_m^1 for each of [`A22_2_ARGS`].
pub const A22_2_SUMMANDS: [u64; 6] = [81, 56, 36, 20, 9, 2];

/// Arguments m of the A_m^1 summands of A_22^3, in printed order.
pub const A22_3_ARGS: [i64; 13] = [18, 15, 12, 9, 6, 14, 11, 8, 5, 10, 7, 4, 6];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_internally_consistent() {
        for (i, (c, a)) in CLASSIFICATION.iter().zip(A_TABLE.iter()).enumerate() {
            let n = i as u64 + 1;
            assert_eq!(c[0] + c[1], n);
            assert_eq!(a[0], n);
            assert_eq!(&c[2..], &a[1..]);
        }
        assert_eq!(P22_ADDENDS.iter().sum::<u64>(), P22);
        assert_eq!(A22_2_SUMMANDS.iter().sum::<u64>(), P22_ADDENDS[2]);
    }
}
