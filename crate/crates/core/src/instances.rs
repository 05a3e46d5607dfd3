//! Named and random instance families.
//!
//! Family strings look like `affine-plane 3` or `random-linear 12 10 3 7`;
//! tokens may be separated by whitespace or `:`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rng::SeededRng;

/// Attempts allowed per requested hyperedge in `random-linear`.
pub const LINEAR_RETRIES_PER_EDGE: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    CompleteGraph {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Fano,
    AffinePlane {
        p: usize,
    },
    ProjectivePlane {
        p: usize,
    },
    SteinerTriple {
        n: usize,
    },
    RandomLinear {
        n: usize,
        m: usize,
        k: usize,
        seed: u64,
    },
    Random {
        n: usize,
        m: usize,
        min_size: usize,
        max_size: usize,
        seed: u64,
    },
}

impl FamilySpec {
    /// Parses a family string; random families without a trailing seed take
    /// `default_seed`.
    pub fn parse_with_seed(s: &str, default_seed: u64) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ':')
            .filter(|t| !t.is_empty())
            .collect();
        let (name, args) = tokens
            .split_first()
            .ok_or_else(|| Error::Family("empty family string".into()))?;
        let int = |i: usize| -> Result<usize> {
            let tok = args
                .get(i)
                .ok_or_else(|| Error::Family(format!("{name}: missing argument {}", i + 1)))?;
            tok.parse().map_err(|_| {
                Error::Family(format!("{name}: '{tok}' is not a non-negative integer"))
            })
        };
        let seed = |i: usize| -> Result<u64> {
            match args.get(i) {
                None => Ok(default_seed),
                Some(tok) => tok
                    .parse()
                    .map_err(|_| Error::Family(format!("{name}: bad seed '{tok}'"))),
            }
        };
        let arity = |lo: usize, hi: usize| -> Result<()> {
            if args.len() < lo || args.len() > hi {
                Err(Error::Family(format!(
                    "{name}: expected {lo}..={hi} arguments, got {}",
                    args.len()
                )))
            } else {
                Ok(())
            }
        };
        let spec = match *name {
            "complete-graph" => {
                arity(1, 1)?;
                FamilySpec::CompleteGraph { n: int(0)? }
            }
            "cycle" => {
                arity(1, 1)?;
                FamilySpec::Cycle { n: int(0)? }
            }
            "fano" => {
                arity(0, 0)?;
                FamilySpec::Fano
            }
            "affine-plane" => {
                arity(1, 1)?;
                FamilySpec::AffinePlane { p: int(0)? }
            }
            "projective-plane" => {
                arity(1, 1)?;
                FamilySpec::ProjectivePlane { p: int(0)? }
            }
            "steiner-triple" => {
                arity(1, 1)?;
                FamilySpec::SteinerTriple { n: int(0)? }
            }
            "random-linear" => {
                arity(3, 4)?;
                FamilySpec::RandomLinear {
                    n: int(0)?,
                    m: int(1)?,
                    k: int(2)?,
                    seed: seed(3)?,
                }
            }
            "random" => {
                arity(3, 4)?;
                let range = args[2];
                let (lo, hi) = parse_range(range)
                    .ok_or_else(|| Error::Family(format!("random: bad size range '{range}'")))?;
                FamilySpec::Random {
                    n: int(0)?,
                    m: int(1)?,
                    min_size: lo,
                    max_size: hi,
                    seed: seed(3)?,
                }
            }
            other => return Err(Error::Family(format!("unknown family '{other}'"))),
        };
        Ok(spec)
    }
}

/// Parses `a..b` or `a..=b` (both inclusive) or a single number.
pub fn parse_range(s: &str) -> Option<(usize, usize)> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi) = (lo.trim().parse().ok()?, hi.trim().parse().ok()?);
        (lo <= hi).then_some((lo, hi))
    } else {
        let v = s.parse().ok()?;
        Some((v, v))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilySpec::parse_with_seed(s, 0)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::CompleteGraph { n } => write!(f, "complete-graph {n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle {n}"),
            FamilySpec::Fano => write!(f, "fano"),
            FamilySpec::AffinePlane { p } => write!(f, "affine-plane {p}"),
            FamilySpec::ProjectivePlane { p } => write!(f, "projective-plane {p}"),
            FamilySpec::SteinerTriple { n } => write!(f, "steiner-triple {n}"),
            FamilySpec::RandomLinear { n, m, k, seed } => {
                write!(f, "random-linear {n} {m} {k} {seed}")
            }
            FamilySpec::Random {
                n,
                m,
                min_size,
                max_size,
                seed,
            } => write!(f, "random {n} {m} {min_size}..{max_size} {seed}"),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Hypergraph> {
    match *spec {
        FamilySpec::CompleteGraph { n } => complete_graph(n),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::Fano => Ok(fano()),
        FamilySpec::AffinePlane { p } => affine_plane(p),
        FamilySpec::ProjectivePlane { p } => projective_plane(p),
        FamilySpec::SteinerTriple { n } => steiner_triple(n),
        FamilySpec::RandomLinear { n, m, k, seed } => random_linear(n, m, k, seed),
        FamilySpec::Random {
            n,
            m,
            min_size,
            max_size,
            seed,
        } => random(n, m, min_size, max_size, seed),
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn require_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Generation(format!(
            "plane order {p} is not prime (only prime orders are supported)"
        )))
    }
}

fn from_edges(n: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph> {
    Hypergraph::new(n, edges)
}

/// K_n as a 2-uniform hypergraph, pairs in lexicographic order.
pub fn complete_graph(n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::Generation("complete-graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push(vec![u, v]);
        }
    }
    from_edges(n, edges)
}

/// C_n: edges `{i, i+1 mod n}`.
pub fn cycle(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::Generation("cycle needs n >= 3".into()));
    }
    from_edges(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect())
}

pub fn fano() -> Hypergraph {
    let lines = vec![
        vec![0, 1, 2],
        vec![0, 3, 4],
        vec![0, 5, 6],
        vec![1, 3, 5],
        vec![1, 4, 6],
        vec![2, 3, 6],
        vec![2, 4, 5],
    ];
    Hypergraph::new(7, lines).expect("Fano lines are valid")
}

/// AG(2, p): point `(x, y)` is vertex `x * p + y`. Lines `y = s x + b` come
/// first (slope-major, then intercept), followed by the `p` vertical lines.
pub fn affine_plane(p: usize) -> Result<Hypergraph> {
    require_prime(p)?;
    let mut lines = Vec::with_capacity(p * p + p);
    for s in 0..p {
        for b in 0..p {
            lines.push((0..p).map(|x| x * p + (s * x + b) % p).collect());
        }
    }
    for c in 0..p {
        lines.push((0..p).map(|y| c * p + y).collect());
    }
    from_edges(p * p, lines)
}

/// Nonzero vectors of F_p^3 whose first nonzero coordinate is 1, in
/// lexicographic order.
fn normalized_points(p: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::with_capacity(p * p + p + 1);
    for x in 0..p {
        for y in 0..p {
            for z in 0..p {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    pts.push(v);
                }
            }
        }
    }
    pts
}

/// PG(2, p): points and lines are normalized homogeneous coordinates in
/// lexicographic order; point `P` lies on line `L` iff `P · L = 0 (mod p)`.
pub fn projective_plane(p: usize) -> Result<Hypergraph> {
    require_prime(p)?;
    let pts = normalized_points(p);
    let lines = pts
        .iter()
        .map(|l| {
            pts.iter()
                .enumerate()
                .filter(|(_, q)| (l[0] * q[0] + l[1] * q[1] + l[2] * q[2]) % p == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    from_edges(pts.len(), lines)
}

/// Bose construction on `Z_v x Z_3` with `v = n / 3` odd; point `(x, i)` is
/// vertex `x + v * i`. Triples `{(x,0),(x,1),(x,2)}` come first, then
/// `{(x,i),(y,i),(x∘y,i+1)}` for `x < y` and each `i`, where
/// `x∘y = (x + y)(v + 1)/2 mod v`.
pub fn steiner_triple(n: usize) -> Result<Hypergraph> {
    if n % 6 != 3 {
        return Err(Error::Generation(format!(
            "Bose construction needs n ≡ 3 (mod 6), got {n}"
        )));
    }
    let v = n / 3;
    let half = v.div_ceil(2);
    let id = |x: usize, i: usize| x + v * (i % 3);
    let mut triples = Vec::new();
    for x in 0..v {
        triples.push(vec![id(x, 0), id(x, 1), id(x, 2)]);
    }
    for x in 0..v {
        for y in x + 1..v {
            let z = ((x + y) * half) % v;
            for i in 0..3 {
                triples.push(vec![id(x, i), id(y, i), id(z, i + 1)]);
            }
        }
    }
    from_edges(n, triples)
}

/// Seeded rejection sampling of a `k`-uniform linear hypergraph: draw
/// uniform `k`-subsets and keep those meeting every kept hyperedge in at most
/// one vertex. Gives up after `LINEAR_RETRIES_PER_EDGE * m` draws.
pub fn random_linear(n: usize, m: usize, k: usize, seed: u64) -> Result<Hypergraph> {
    if k == 0 || k > n {
        return Err(Error::Generation(format!(
            "random-linear needs 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    // Each pair of vertices lies in at most one hyperedge.
    if k >= 2 && m * (k * (k - 1) / 2) > n * (n - 1) / 2 {
        return Err(Error::Generation(format!(
            "no {k}-uniform linear hypergraph on {n} vertices has {m} hyperedges"
        )));
    }
    if k == 1 && m > n {
        return Err(Error::Generation(format!(
            "at most {n} distinct loops fit on {n} vertices"
        )));
    }
    let mut rng = SeededRng::new(seed);
    let mut covered = vec![vec![false; n]; n];
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    let cap = LINEAR_RETRIES_PER_EDGE.saturating_mul(m.max(1));
    let mut draws = 0;
    while edges.len() < m {
        if draws == cap {
            return Err(Error::Generation(format!(
                "random-linear {n} {m} {k} {seed}: retry cap of {cap} draws exceeded with {} hyperedges placed",
                edges.len()
            )));
        }
        draws += 1;
        let cand = rng.subset(n, k);
        let clash = if k == 1 {
            edges.iter().any(|e| e == &cand)
        } else {
            cand.iter()
                .enumerate()
                .any(|(a, &x)| cand[a + 1..].iter().any(|&y| covered[x][y]))
        };
        if clash {
            continue;
        }
        for (a, &x) in cand.iter().enumerate() {
            for &y in &cand[a + 1..] {
                covered[x][y] = true;
            }
        }
        edges.push(cand);
    }
    from_edges(n, edges)
}

/// Unconstrained seeded sampling: each hyperedge has a uniform size in
/// `min_size..=max_size` (clipped to `n`) and uniform vertices.
pub fn random(
    n: usize,
    m: usize,
    min_size: usize,
    max_size: usize,
    seed: u64,
) -> Result<Hypergraph> {
    if min_size == 0 || min_size > max_size || min_size > n {
        return Err(Error::Generation(format!(
            "random needs 1 <= min_size <= max_size and min_size <= n, got {min_size}..{max_size} on {n} vertices"
        )));
    }
    let hi = max_size.min(n);
    let mut rng = SeededRng::new(seed);
    let edges = (0..m)
        .map(|_| {
            let size = rng.inclusive(min_size, hi);
            rng.subset(n, size)
        })
        .collect();
    from_edges(n, edges)
}
