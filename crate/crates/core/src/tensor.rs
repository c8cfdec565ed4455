//! Dense structure-constant tables for bilinear and trilinear maps.

use crate::linalg::Vector;
use crate::scalar::Field;

/// A bilinear map `U × W → X` stored as `table[i·dim W + j] = f(u_i, w_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bilinear<F> {
    left: usize,
    right: usize,
    out: usize,
    table: Vec<Vector<F>>,
}

/// A trilinear map `U × U × U → X`.
#[derive(Clone, Debug, PartialEq)]
pub struct Trilinear<F> {
    arg: usize,
    out: usize,
    table: Vec<Vector<F>>,
}

/// An index in a sparse entry list was out of range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EntryOutOfRange {
    pub position: usize,
}

impl<F: Field> Bilinear<F> {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        Bilinear {
            left,
            right,
            out,
            table: vec![Vector::zeros(out); left * right],
        }
    }

    /// Tabulates `f` on basis pairs.
    pub fn from_fn(
        left: usize,
        right: usize,
        out: usize,
        mut f: impl FnMut(usize, usize) -> Vector<F>,
    ) -> Self {
        let mut table = Vec::with_capacity(left * right);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                debug_assert_eq!(v.dim(), out);
                table.push(v);
            }
        }
        Bilinear {
            left,
            right,
            out,
            table,
        }
    }

    /// Builds the table from `(i, j, k, c)` entries meaning `f(u_i, w_j) ∋ c·x_k`.
    /// Repeated entries accumulate.
    pub fn from_entries(
        left: usize,
        right: usize,
        out: usize,
        entries: &[(usize, usize, usize, F)],
    ) -> Result<Self, EntryOutOfRange> {
        let mut b = Self::zero(left, right, out);
        for (position, (i, j, k, c)) in entries.iter().enumerate() {
            if *i >= left || *j >= right || *k >= out {
                return Err(EntryOutOfRange { position });
            }
            let slot = &mut b.table[i * right + j].coords[*k];
            *slot = slot.clone() + c;
        }
        Ok(b)
    }

    /// Nonzero entries in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, F)> {
        let mut out = Vec::new();
        for i in 0..self.left {
            for j in 0..self.right {
                for (k, c) in self.get(i, j).support() {
                    out.push((i, j, k, c.clone()));
                }
            }
        }
        out
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector<F> {
        &self.table[i * self.right + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector<F>) {
        self.table[i * self.right + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vector::is_zero)
    }

    pub fn eval(&self, u: &Vector<F>, w: &Vector<F>) -> Vector<F> {
        let mut out = Vector::zeros(self.out);
        for (i, a) in u.support() {
            for (j, b) in w.support() {
                let c = a.clone() * b;
                out.axpy(&c, self.get(i, j));
            }
        }
        out
    }

    /// `f(u_i, w)`
    pub fn eval_left_basis(&self, i: usize, w: &Vector<F>) -> Vector<F> {
        let mut out = Vector::zeros(self.out);
        for (j, b) in w.support() {
            out.axpy(b, self.get(i, j));
        }
        out
    }

    /// `f(u, w_j)`
    pub fn eval_right_basis(&self, u: &Vector<F>, j: usize) -> Vector<F> {
        let mut out = Vector::zeros(self.out);
        for (i, a) in u.support() {
            out.axpy(a, self.get(i, j));
        }
        out
    }
}

impl<F: Field> Trilinear<F> {
    pub fn zero(arg: usize, out: usize) -> Self {
        Trilinear {
            arg,
            out,
            table: vec![Vector::zeros(out); arg * arg * arg],
        }
    }

    pub fn from_fn(arg: usize, out: usize, mut f: impl FnMut(usize, usize, usize) -> Vector<F>) -> Self {
        let mut table = Vec::with_capacity(arg * arg * arg);
        for i in 0..arg {
            for j in 0..arg {
                for k in 0..arg {
                    let v = f(i, j, k);
                    debug_assert_eq!(v.dim(), out);
                    table.push(v);
                }
            }
        }
        Trilinear { arg, out, table }
    }

    /// Builds the table from `(i, j, k, l, c)` entries meaning `f(u_i, u_j, u_k) ∋ c·x_l`.
    pub fn from_entries(
        arg: usize,
        out: usize,
        entries: &[(usize, usize, usize, usize, F)],
    ) -> Result<Self, EntryOutOfRange> {
        let mut t = Self::zero(arg, out);
        for (position, (i, j, k, l, c)) in entries.iter().enumerate() {
            if *i >= arg || *j >= arg || *k >= arg || *l >= out {
                return Err(EntryOutOfRange { position });
            }
            let slot = &mut t.table[(i * arg + j) * arg + k].coords[*l];
            *slot = slot.clone() + c;
        }
        Ok(t)
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, usize, F)> {
        let mut out = Vec::new();
        for i in 0..self.arg {
            for j in 0..self.arg {
                for k in 0..self.arg {
                    for (l, c) in self.get(i, j, k).support() {
                        out.push((i, j, k, l, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.arg, self.out)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Vector<F> {
        &self.table[(i * self.arg + j) * self.arg + k]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vector::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Vector<F>) -> Vector<F>) -> Self {
        let table: Vec<Vector<F>> = self.table.iter().map(f).collect();
        let out = table.first().map_or(self.out, Vector::dim);
        Trilinear {
            arg: self.arg,
            out,
            table,
        }
    }

    pub fn eval(&self, u: &Vector<F>, v: &Vector<F>, w: &Vector<F>) -> Vector<F> {
        let mut out = Vector::zeros(self.out);
        for (i, a) in u.support() {
            for (j, b) in v.support() {
                let ab = a.clone() * b;
                for (k, c) in w.support() {
                    let abc = ab.clone() * c;
                    out.axpy(&abc, self.get(i, j, k));
                }
            }
        }
        out
    }
}
