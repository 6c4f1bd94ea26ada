//! Line-by-line transcription of the published Macaulay2 function
//! `multiFatPoints`, kept independent of the library's dispatch.

pub fn bin0(m: i64, k: i64) -> i64 {
    if m >= k {
        fatpoints::bin(m, k) as i64
    } else {
        0
    }
}

/// `None` outside the program's domain (`m < min(a,b)` and `m > 3`).
pub fn multi_fat_points(m: i64, s: i64, a: i64, b: i64) -> Option<i64> {
    if m < a.min(b) && m > 3 {
        return None;
    }
    let (big_a, big_b) = (a.max(b), a.min(b));
    let total = (big_a + 1) * (big_b + 1);
    let generic = total.min(s * bin0(m + 1, 2) - s * bin0(m - big_b, 2));
    if m >= big_b {
        if s % 2 == 1 {
            let k = s / 2;
            let c = big_a - big_b * k - s * (m - big_b);
            if 0 <= c && c <= big_b - 2 {
                return Some(total - bin0(c + 2, 2));
            }
        }
        Some(generic)
    } else if s == 5 && big_a == 5 && big_b == 4 {
        // printed as 54, the plane value 55 - 1; on P1xP1 that is 30 - 1
        Some(29)
    } else {
        Some(generic)
    }
}

/// The program applies its `(5, 4)` exception for every `m <= 3`; it only
/// holds for triple points.
pub fn excluded(m: u64, s: u64, a: u64, b: u64) -> bool {
    m < 3 && s == 5 && (a.max(b), a.min(b)) == (5, 4)
}
