use super::{Field, Ring};

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Mat<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> R>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data: Vec<R> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        Mat { rows: r, cols: c, data }
    }

    pub fn diag(v: Vec<R>) -> Self {
        let n = v.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in v.into_iter().enumerate() {
            m.data[i * n + i] = x;
        }
        m
    }

    pub fn column(v: Vec<R>) -> Self {
        let n = v.len();
        Mat { rows: n, cols: 1, data: v }
    }

    pub fn row(v: Vec<R>) -> Self {
        let n = v.len();
        Mat { rows: 1, cols: n, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_slice(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        let c = self.cols;
        self.data.iter().enumerate().map(move |(k, v)| (k / c, k % c, v))
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.entries().filter(|(_, _, v)| !v.is_zero())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzeros().all(|(i, j, _)| i == j)
    }

    /// True when the matrix equals c·I for c = entry (0, 0).
    pub fn scalar_value(&self) -> Option<R> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        for (i, j, v) in self.entries() {
            let want_zero = i != j;
            if want_zero && !v.is_zero() {
                return None;
            }
            if !want_zero && *v != c {
                return None;
            }
        }
        Some(c)
    }

    pub fn map<S: Ring, F: Fn(&R) -> S>(&self, f: F) -> Mat<S> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring, E, F: Fn(&R) -> Result<S, E>>(&self, f: F) -> Result<Mat<S>, E> {
        let data: Result<Vec<S>, E> = self.data.iter().map(f).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data: data? })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| if x.is_zero() { R::zero() } else { c.mul(x) })
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx].add_assign(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc.add_assign(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn kron(&self, o: &Self) -> Self {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for (i, j, a) in self.nonzeros() {
            for (k, l, b) in o.nonzeros() {
                out.set(i * o.rows + k, j * o.cols + l, a.mul(b));
            }
        }
        out
    }

    /// First nonzero entry of self − o, if any.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Some((usize::MAX, usize::MAX));
        }
        self.entries().find(|(i, j, v)| *v != o.get(*i, *j)).map(|(i, j, _)| (i, j))
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero();
        for i in 0..self.rows.min(self.cols) {
            acc.add_assign(self.get(i, i));
        }
        acc
    }
}

impl<F: Field> Mat<F> {
    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().unwrap();
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let b = self.get(r, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = self.get(i, j).sub(&f.mul(b));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of {x : self·x = 0}.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let piv = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![F::zero(); self.cols];
                x[f] = F::one();
                for (i, &c) in piv.iter().enumerate() {
                    x[c] = m.get(i, f).neg();
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
    }

    pub fn det(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return F::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = det.neg();
            }
            let pv = m.get(c, c).clone();
            det = det.mul(&pv);
            let inv = pv.inv().unwrap();
            for i in c + 1..n {
                let f = m.get(i, c).mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j).sub(&f.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

impl Mat<super::FracBi> {
    /// Entrywise evaluation at s, u; `None` if a denominator vanishes.
    pub fn eval_at<const P: u64>(&self, s: super::Fp<P>, u: super::Fp<P>) -> Option<Mat<super::Fp<P>>> {
        self.try_map(|x| x.eval(s, u).ok_or(())).ok()
    }

    /// Entrywise conversion to Laurent polynomials, if possible.
    pub fn to_laurent(&self) -> Option<Mat<super::LaurentBi>> {
        self.try_map(|x| x.to_laurent()).ok()
    }
}

impl Mat<super::LaurentBi> {
    pub fn eval_at<const P: u64>(&self, s: super::Fp<P>, u: super::Fp<P>) -> Option<Mat<super::Fp<P>>> {
        self.try_map(|x| x.eval(s, u).ok_or(())).ok()
    }
}
