//! Loop-free Temperley-Lieb diagrams on the standard k-box.
//!
//! A diagram is a non-crossing perfect matching of the `2k` boundary nodes
//! `N_1..N_k` (north face) and `S_1..S_k` (south face). Closed loops produced by
//! concatenation are never stored; [`Diagram::multiply`] returns how many were
//! removed so callers can account for the factor `δ^loops`.

use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    North,
    South,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub face: Face,
    pub position: usize,
}

impl Endpoint {
    pub fn north(position: usize) -> Self {
        Self {
            face: Face::North,
            position,
        }
    }

    pub fn south(position: usize) -> Self {
        Self {
            face: Face::South,
            position,
        }
    }

    fn tag(&self) -> &'static str {
        match self.face {
            Face::North => "N",
            Face::South => "S",
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.tag(), self.position)
    }
}

/// An unordered pair of endpoints, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord(pub Endpoint, pub Endpoint);

impl Chord {
    pub fn new(a: Endpoint, b: Endpoint) -> Self {
        if a <= b {
            Chord(a, b)
        } else {
            Chord(b, a)
        }
    }

    pub fn is_propagating(&self) -> bool {
        self.0.face != self.1.face
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A loop-free diagram of rank `k`.
///
/// Nodes are indexed internally as `N_p -> p - 1` and `S_p -> k + p - 1`, and the
/// matching is stored as a partner table, so equal diagrams are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    k: usize,
    partner: Vec<usize>,
}

impl Diagram {
    /// The diagram with only vertical chords `N_i - S_i`. Panics if `k == 0`.
    pub fn identity(k: usize) -> Self {
        assert!(k >= 1, "a diagram needs at least one node per face");
        let partner = (0..2 * k)
            .map(|x| if x < k { x + k } else { x - k })
            .collect();
        Self { k, partner }
    }

    /// The simple diagram `d_i` of `TL(A_n)`: cups joining `i, i+1` on both faces.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        let mut d = Self::identity(n + 1);
        let k = d.k;
        let (a, b) = (i - 1, i);
        d.partner[a] = b;
        d.partner[b] = a;
        d.partner[k + a] = k + b;
        d.partner[k + b] = k + a;
        Ok(d)
    }

    /// Builds a diagram from chords, checking the matching and planarity invariants.
    pub fn from_chords(k: usize, chords: &[Chord]) -> Result<Self> {
        validate(k, chords)?;
        let mut partner = vec![0; 2 * k];
        for c in chords {
            let (a, b) = (node_index(k, c.0), node_index(k, c.1));
            partner[a] = b;
            partner[b] = a;
        }
        Ok(Self { k, partner })
    }

    pub(crate) fn from_partner_unchecked(k: usize, partner: Vec<usize>) -> Self {
        debug_assert_eq!(partner.len(), 2 * k);
        Self { k, partner }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Rank `n = k - 1` of the Coxeter group indexing this diagram.
    pub fn rank(&self) -> usize {
        self.k - 1
    }

    pub fn partner(&self, e: Endpoint) -> Endpoint {
        endpoint_of(self.k, self.partner[node_index(self.k, e)])
    }

    pub(crate) fn partner_table(&self) -> &[usize] {
        &self.partner
    }

    /// Chords in canonical order (sorted by their first endpoint, north before south).
    pub fn chords(&self) -> Vec<Chord> {
        (0..2 * self.k)
            .filter(|&x| x < self.partner[x])
            .map(|x| Chord(endpoint_of(self.k, x), endpoint_of(self.k, self.partner[x])))
            .collect()
    }

    /// Re-checks the stored invariants.
    pub fn validate(&self) -> Result<()> {
        validate(self.k, &self.chords())
    }

    /// Stacks `self` on top of `bottom` and returns `(loops, product)`.
    ///
    /// Paths are traced through the shared middle row of nodes, which is the south
    /// face of `self` and the north face of `bottom`.
    pub fn multiply(&self, bottom: &Diagram) -> Result<(usize, Diagram)> {
        if self.k != bottom.k {
            return Err(Error::RankMismatch {
                left: self.k,
                right: bottom.k,
            });
        }
        let k = self.k;
        let top = &self.partner;
        let bot = &bottom.partner;
        let mut middle_seen = vec![false; k];
        let mut out = vec![usize::MAX; 2 * k];

        // Exterior node -> exterior node. `x` is a node of `top` or `bottom`
        // depending on `in_top`; middle node m is top's S_m and bottom's N_m.
        let trace = |start: usize, mut in_top: bool, seen: &mut [bool]| -> usize {
            let mut x = start;
            loop {
                if in_top {
                    let y = top[x];
                    if y < k {
                        return y;
                    }
                    seen[y - k] = true;
                    x = y - k;
                    in_top = false;
                } else {
                    let y = bot[x];
                    if y >= k {
                        return y;
                    }
                    seen[y] = true;
                    x = k + y;
                    in_top = true;
                }
            }
        };

        for p in 0..k {
            if out[p] == usize::MAX {
                let end = trace(p, true, &mut middle_seen);
                out[p] = end;
                out[end] = p;
            }
        }
        for p in k..2 * k {
            if out[p] == usize::MAX {
                let end = trace(p, false, &mut middle_seen);
                out[p] = end;
                out[end] = p;
            }
        }

        let mut loops = 0;
        for m in 0..k {
            if middle_seen[m] {
                continue;
            }
            loops += 1;
            let mut cur = m;
            loop {
                middle_seen[cur] = true;
                let via_top = top[k + cur] - k;
                middle_seen[via_top] = true;
                cur = bot[via_top];
                if cur == m {
                    break;
                }
            }
        }
        Ok((loops, Diagram { k, partner: out }))
    }

    /// Left-to-right product of the simple diagrams of `word`, with the total number
    /// of loops removed along the way.
    pub fn from_word(word: &Word) -> (usize, Diagram) {
        let n = word.rank();
        let mut acc = Diagram::identity(n + 1);
        let mut loops = 0;
        for &letter in word.letters() {
            let simple = Diagram::simple(letter, n).expect("word letters lie within rank");
            let (l, d) = acc.multiply(&simple).expect("equal ranks");
            loops += l;
            acc = d;
        }
        (loops, acc)
    }

    /// Canonical JSON, e.g. `{"k": 2, "chords": [["N",1,"N",2], ["S",1,"S",2]]}`.
    pub fn to_json(&self) -> String {
        let chords: Vec<String> = self
            .chords()
            .iter()
            .map(|c| {
                format!(
                    "[\"{}\",{},\"{}\",{}]",
                    c.0.tag(),
                    c.0.position,
                    c.1.tag(),
                    c.1.position
                )
            })
            .collect();
        format!("{{\"k\": {}, \"chords\": [{}]}}", self.k, chords.join(", "))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDiagram =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.into_diagram()
    }
}

#[derive(Deserialize)]
pub(crate) struct RawDiagram {
    k: usize,
    chords: Vec<(String, usize, String, usize)>,
}

impl RawDiagram {
    pub(crate) fn into_diagram(self) -> Result<Diagram> {
        let face = |tag: &str| match tag {
            "N" => Ok(Face::North),
            "S" => Ok(Face::South),
            other => Err(Error::Parse(format!("unknown face {other:?}"))),
        };
        let chords = self
            .chords
            .iter()
            .map(|(fa, pa, fb, pb)| {
                Ok(Chord::new(
                    Endpoint {
                        face: face(fa)?,
                        position: *pa,
                    },
                    Endpoint {
                        face: face(fb)?,
                        position: *pb,
                    },
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Diagram::from_chords(self.k, &chords)
    }
}

fn node_index(k: usize, e: Endpoint) -> usize {
    match e.face {
        Face::North => e.position - 1,
        Face::South => k + e.position - 1,
    }
}

fn endpoint_of(k: usize, x: usize) -> Endpoint {
    if x < k {
        Endpoint::north(x + 1)
    } else {
        Endpoint::south(x - k + 1)
    }
}

/// Position in the cyclic boundary order `N_1, ..., N_k, S_k, ..., S_1`.
fn cyclic_index(k: usize, e: Endpoint) -> usize {
    match e.face {
        Face::North => e.position - 1,
        Face::South => 2 * k - e.position,
    }
}

/// Checks that `chords` form a non-crossing perfect matching of the k-box.
pub fn validate(k: usize, chords: &[Chord]) -> Result<()> {
    if k == 0 {
        return Err(Error::EmptyBox);
    }
    if chords.len() != k {
        return Err(Error::NotPerfectMatching(format!(
            "expected {k} chords, found {}",
            chords.len()
        )));
    }
    let mut owner: Vec<Option<usize>> = vec![None; 2 * k];
    for (ci, c) in chords.iter().enumerate() {
        for e in [c.0, c.1] {
            if e.position == 0 || e.position > k {
                return Err(Error::NotPerfectMatching(format!(
                    "node {e} is outside the {k}-box"
                )));
            }
            let slot = &mut owner[cyclic_index(k, e)];
            if slot.is_some() {
                return Err(Error::NotPerfectMatching(format!("node {e} is used twice")));
            }
            *slot = Some(ci);
        }
    }
    // Every slot is filled: 2k distinct endpoints were placed into 2k slots.
    let mut stack: Vec<usize> = Vec::new();
    let mut opened = vec![false; chords.len()];
    for slot in owner.iter() {
        let ci = slot.expect("all slots filled");
        if !opened[ci] {
            opened[ci] = true;
            stack.push(ci);
        } else {
            let top = stack.pop().expect("chord opened before closing");
            if top != ci {
                return Err(Error::CrossingChords {
                    a: chords[top],
                    b: chords[ci],
                });
            }
        }
    }
    Ok(())
}
