//! Deterministic random inputs for probes and property suites.
//!
//! Entries are kept small (numerators within +-9, denominators up to 4) so
//! exact elimination stays cheap. Streams derive from a seed plus a stream
//! index, so independent probes can run in parallel and still reproduce
//! byte-identical results.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{MatrixQ, Rational, SubspaceQ};
use crate::forms::BilinearFormQ;
use crate::space::{DiffSpace, GeneratorPlot, SymbolTag};

const MAX_NUMERATOR: i64 = 9;
const MAX_DENOMINATOR: i64 = 4;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent deterministic stream for (seed, stream index).
    pub fn stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    pub fn rational(&mut self) -> Rational {
        Rational::new(
            self.rng.random_range(-MAX_NUMERATOR..=MAX_NUMERATOR),
            self.rng.random_range(1..=MAX_DENOMINATOR),
        )
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn nonzero_vector(&mut self, n: usize) -> Vec<Rational> {
        assert!(n > 0, "no nonzero vectors in dimension 0");
        loop {
            let v = self.vector(n);
            if v.iter().any(|x| !x.is_zero()) {
                return v;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> MatrixQ {
        let mut m = MatrixQ::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.rational());
            }
        }
        m
    }

    pub fn symmetric(&mut self, n: usize) -> MatrixQ {
        let mut m = MatrixQ::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = self.rational();
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
        m
    }

    pub fn invertible(&mut self, n: usize) -> MatrixQ {
        loop {
            let m = self.matrix(n, n);
            if m.rank() == n {
                return m;
            }
        }
    }

    /// Exact positive definite matrix: Y^t Y + I.
    pub fn positive_definite(&mut self, n: usize) -> MatrixQ {
        let y = self.matrix(n, n);
        &y.transpose().matmul(&y) + &MatrixQ::identity(n)
    }

    /// Random subspace of the requested dimension (retries until the
    /// sampled spanning rows are independent).
    pub fn subspace(&mut self, ambient: usize, dim: usize) -> SubspaceQ {
        assert!(dim <= ambient);
        if dim == 0 {
            return SubspaceQ::zero(ambient);
        }
        loop {
            let candidate = SubspaceQ::span_of_rows(&self.matrix(dim, ambient));
            if candidate.dim() == dim {
                return candidate;
            }
        }
    }

    /// Random space: dimension 1..=max_dim, up to three generators with
    /// random catalog symbols and nonzero directions.
    pub fn space(&mut self, max_dim: usize) -> DiffSpace {
        let n = self.usize_in(1, max_dim);
        let count = self.usize_in(0, 3.min(n));
        let generators = (0..count)
            .map(|_| {
                let symbol = SymbolTag::CATALOG[self.usize_in(0, 2)];
                GeneratorPlot::new(symbol, self.nonzero_vector(n))
            })
            .collect();
        DiffSpace::from_generators(n, generators).expect("sampled generators are valid")
    }

    /// Random smooth symmetric form on the space: F^t X F with X symmetric.
    pub fn smooth_form(&mut self, space: &DiffSpace) -> MatrixQ {
        let f = crate::dual::dual_basis(space);
        let x = self.symmetric(f.dim());
        f.matrix().transpose().matmul(&x).matmul(f.matrix())
    }

    /// Random pseudo-metric on the space: F^t X F with X positive definite.
    pub fn pseudo_metric(&mut self, space: &DiffSpace) -> BilinearFormQ {
        let f = crate::dual::dual_basis(space);
        let x = self.positive_definite(f.dim());
        let m = f.matrix().transpose().matmul(&x).matmul(f.matrix());
        BilinearFormQ::new(m).expect("congruence of a symmetric matrix")
    }
}
