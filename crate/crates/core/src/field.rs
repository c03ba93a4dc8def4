//! Bit-packed arithmetic in GF(2^k), 1 <= k <= 16.
//!
//! Elements are the k-bit words 0..2^k; the word is the coefficient vector
//! of the residue polynomial, so addition is XOR and squaring is the
//! Frobenius endomorphism.  All operations reduce modulo a fixed irreducible
//! polynomial checked at construction time.

use crate::Error;

/// Default modulus per extension degree: the lexicographically smallest
/// irreducible polynomial of degree k over GF(2) (for k = 1 we keep the
/// conventional x + 1).  Fixed so element encodings are reproducible.
const DEFAULT_MODULI: [u32; 16] = [
    0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021,
    0x8003, 0x1002b,
];

fn poly_deg(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_deg(b);
    while a != 0 && poly_deg(a) >= db {
        a ^= b << (poly_deg(a) - db);
    }
    a
}

fn is_irreducible(p: u32) -> bool {
    let k = poly_deg(p);
    if k < 1 {
        return false;
    }
    for d in 1..=(k / 2) {
        for q in (1u32 << d)..(1u32 << (d + 1)) {
            if poly_rem(p, q) == 0 {
                return false;
            }
        }
    }
    true
}

/// A field GF(2^k) with a fixed irreducible modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    k: u8,
    modulus: u32,
}

impl Field {
    /// Builds GF(2^k) with the given modulus, rejecting reducible ones.
    pub fn new(k: u32, modulus: u32) -> Result<Field, Error> {
        if !(1..=16).contains(&k) {
            return Err(Error::DegreeOutOfRange(k));
        }
        if poly_deg(modulus) != k as i32 {
            return Err(Error::ReducibleModulus(modulus));
        }
        // k = 1 admits both x and x+1; anything of degree 1 is irreducible.
        if !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus(modulus));
        }
        Ok(Field {
            k: k as u8,
            modulus,
        })
    }

    /// GF(2^k) with the documented default modulus.
    pub fn with_default_modulus(k: u32) -> Result<Field, Error> {
        if !(1..=16).contains(&k) {
            return Err(Error::DegreeOutOfRange(k));
        }
        Field::new(k, DEFAULT_MODULI[(k - 1) as usize])
    }

    pub fn gf2() -> Field {
        Field { k: 1, modulus: 0x3 }
    }

    pub fn gf4() -> Field {
        Field { k: 2, modulus: 0x7 }
    }

    pub fn k(&self) -> u32 {
        self.k as u32
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, 2^k.
    pub fn order(&self) -> u32 {
        1 << self.k
    }

    /// Iterates over every element exactly once.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order()
    }

    #[inline]
    pub fn add(a: u32, b: u32) -> u32 {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return a & b;
        }
        // Carry-less multiply then reduce.
        let mut acc: u64 = 0;
        let mut b = b as u64;
        let mut a = a as u64;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            a <<= 1;
            b >>= 1;
        }
        let m = self.modulus as u64;
        let dm = 63 - m.leading_zeros() as i32;
        while acc != 0 {
            let da = 63 - acc.leading_zeros() as i32;
            if da < dm {
                break;
            }
            acc ^= m << (da - dm);
        }
        acc as u32
    }

    #[inline]
    pub fn square(&self, a: u32) -> u32 {
        self.mul(a, a)
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.square(a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u32) -> Result<u32, Error> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, (self.order() - 2) as u64))
    }

    /// Hexadecimal element encoding used in all file formats.
    pub fn format_el(&self, a: u32) -> String {
        format!("{:x}", a)
    }

    pub fn parse_el(&self, s: &str) -> Option<u32> {
        let s = s.strip_prefix("0x").unwrap_or(s);
        let v = u32::from_str_radix(s, 16).ok()?;
        if v < self.order() {
            Some(v)
        } else {
            None
        }
    }

    /// Header line shared by the text formats.
    pub fn header(&self) -> String {
        format!("field 2^{} {:#x}", self.k, self.modulus)
    }
}

/// A field element carrying its owning field, for checked scalar arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct El {
    pub field: Field,
    pub bits: u32,
}

impl El {
    pub fn new(field: Field, bits: u32) -> El {
        debug_assert!(bits < field.order());
        El { field, bits }
    }

    fn same_field(&self, other: &El) -> Result<(), Error> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &El) -> Result<El, Error> {
        self.same_field(other)?;
        Ok(El::new(self.field, self.bits ^ other.bits))
    }

    pub fn mul(&self, other: &El) -> Result<El, Error> {
        self.same_field(other)?;
        Ok(El::new(self.field, self.field.mul(self.bits, other.bits)))
    }

    pub fn square(&self) -> El {
        El::new(self.field, self.field.square(self.bits))
    }

    pub fn inv(&self) -> Result<El, Error> {
        Ok(El::new(self.field, self.field.inv(self.bits)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_are_irreducible() {
        for k in 1..=16 {
            let f = Field::with_default_modulus(k).unwrap();
            assert_eq!(f.k(), k);
            assert!(is_irreducible(f.modulus()));
        }
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 + 1 = (x+1)^2 in characteristic 2.
        assert_eq!(Field::new(2, 0x5), Err(Error::ReducibleModulus(0x5)));
        assert_eq!(Field::new(0, 0x3), Err(Error::DegreeOutOfRange(0)));
        assert_eq!(Field::new(17, 0x3), Err(Error::DegreeOutOfRange(17)));
    }

    #[test]
    fn gf2_arithmetic() {
        let f = Field::gf2();
        assert_eq!(Field::add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
        assert_eq!(f.inv(1).unwrap(), 1);
        assert_eq!(f.inv(0), Err(Error::DivisionByZero));
    }

    #[test]
    fn gf4_arithmetic() {
        // With modulus x^2+x+1, writing a = 0b10: a*a = a+1, inv(a) = a+1.
        let f = Field::gf4();
        let a = 0b10;
        assert_eq!(f.mul(a, a), 0b11);
        assert_eq!(f.inv(a).unwrap(), 0b11);
        assert_eq!(f.mul(a, 0b11), 1);
    }

    #[test]
    fn inverses_exhaustive_small_fields() {
        for k in 1..=8 {
            let f = Field::with_default_modulus(k).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "k={} a={:x}", k, a);
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for k in 1..=4 {
            let f = Field::with_default_modulus(k).unwrap();
            for x in f.elements() {
                for y in f.elements() {
                    assert_eq!(f.square(x ^ y), f.square(x) ^ f.square(y));
                }
            }
        }
        // Randomized spot check for the larger fields.
        let mut rng = crate::ElStream::new(7);
        for k in 5..=16 {
            let f = Field::with_default_modulus(k).unwrap();
            for _ in 0..200 {
                let x = rng.next_el(f);
                let y = rng.next_el(f);
                assert_eq!(f.square(x ^ y), f.square(x) ^ f.square(y));
            }
        }
    }

    #[test]
    fn element_encoding_round_trip() {
        let f = Field::gf4();
        for a in f.elements() {
            assert_eq!(f.parse_el(&f.format_el(a)), Some(a));
        }
        assert_eq!(f.parse_el("4"), None);
        assert_eq!(f.header(), "field 2^2 0x7");
    }

    #[test]
    fn checked_elements() {
        let f2 = Field::gf2();
        let f4 = Field::gf4();
        let a = El::new(f2, 1);
        let b = El::new(f4, 1);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.add(&a).unwrap().bits, 0);
    }
}
