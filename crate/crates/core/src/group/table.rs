//! Full element tables of matrix groups, built by breadth-first closure.

use std::collections::HashMap;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::generic::matrix_group_order;
use crate::matrix::{Mat, MatrixRing};

use super::gens::standard_generators;
use super::setting::ClassicalSetting;
use super::spec::{Family, GroupSpec, Sign};
use super::FiniteGroup;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: u128 = 1 << 22;

/// Every element of a matrix group, sorted by matrix key.
#[derive(Debug, Clone)]
pub struct GroupTable {
    setting: ClassicalSetting,
    keys: Vec<u128>,
    index: HashMap<u128, u32>,
    arena: Vec<u8>,
    generators: Vec<usize>,
    generator_inverses: Vec<usize>,
    identity: usize,
}

/// Closure of `gens` under right multiplication; `Err` past `limit` elements.
fn closure(ring: &MatrixRing, gens: &[Mat], limit: usize) -> std::result::Result<Vec<u128>, usize> {
    let len = ring.len();
    let id = ring.identity();
    let mut seen: HashMap<u128, ()> = HashMap::new();
    let mut arena: Vec<u8> = id.clone();
    let mut keys = vec![ring.encode(&id)];
    seen.insert(keys[0], ());
    let mut buf = ring.zero();
    let mut head = 0;
    while head < keys.len() {
        for g in gens {
            ring.mul_into(&arena[head * len..(head + 1) * len], g, &mut buf);
            let k = ring.encode(&buf);
            if seen.insert(k, ()).is_none() {
                keys.push(k);
                arena.extend_from_slice(&buf);
                if keys.len() > limit {
                    return Err(keys.len());
                }
            }
        }
        head += 1;
    }
    Ok(keys)
}

/// Enumerates the group named by `spec` (projective flag ignored).
pub fn generate(spec: &GroupSpec, cap: u128) -> Result<GroupTable> {
    let expected = matrix_group_order(spec)?;
    if expected > cap {
        return Err(Error::CapExceeded {
            what: "group order",
            needed: expected,
            cap,
        });
    }
    let sg = standard_generators(spec)?;
    let setting = sg.setting;
    setting.ensure_enumerable()?;
    let ring = setting.ring().clone();
    let expected = expected as usize;
    // greedily keep candidates that enlarge the subgroup generated so far
    let mut gens: Vec<Mat> = Vec::new();
    let mut current: Vec<u128> = vec![ring.encode(&ring.identity())];
    let mut members: std::collections::HashSet<u128> = current.iter().copied().collect();
    for c in &sg.candidates {
        if current.len() == expected {
            break;
        }
        if members.contains(&ring.encode(c)) {
            continue;
        }
        gens.push(c.clone());
        current = closure(&ring, &gens, expected).map_err(|seen| {
            Error::Consistency(format!(
                "{spec}: closure exceeded the expected order {expected} ({seen} elements)"
            ))
        })?;
        members = current.iter().copied().collect();
    }
    if current.len() != expected {
        return Err(Error::Consistency(format!(
            "{spec}: generators produce {} elements, expected {expected}",
            current.len()
        )));
    }
    let gen_keys: Vec<u128> = gens.iter().map(|g| ring.encode(g)).collect();
    GroupTable::from_keys(setting, current, &gen_keys)
}

impl GroupTable {
    fn from_keys(
        setting: ClassicalSetting,
        mut keys: Vec<u128>,
        gen_keys: &[u128],
    ) -> Result<Self> {
        keys.sort_unstable();
        keys.dedup();
        let ring = setting.ring();
        let len = ring.len();
        let mut arena = vec![0u8; keys.len() * len];
        let mut index = HashMap::with_capacity(keys.len());
        for (i, &k) in keys.iter().enumerate() {
            ring.decode_into(k, &mut arena[i * len..(i + 1) * len]);
            index.insert(k, i as u32);
        }
        let identity = *index
            .get(&ring.encode(&ring.identity()))
            .ok_or_else(|| Error::Consistency("identity missing".into()))?
            as usize;
        let generators = gen_keys
            .iter()
            .map(|k| {
                index
                    .get(k)
                    .map(|&i| i as usize)
                    .ok_or_else(|| Error::Consistency("generator missing from table".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut table = GroupTable {
            setting,
            keys,
            index,
            arena,
            generators,
            generator_inverses: Vec::new(),
            identity,
        };
        table.generator_inverses = table.generators.iter().map(|&g| table.inv(g)).collect();
        Ok(table)
    }

    pub fn spec(&self) -> &GroupSpec {
        self.setting.spec()
    }

    pub fn setting(&self) -> &ClassicalSetting {
        &self.setting
    }

    pub fn ring(&self) -> &MatrixRing {
        self.setting.ring()
    }

    pub fn keys(&self) -> &[u128] {
        &self.keys
    }

    pub fn matrix(&self, i: usize) -> &[u8] {
        let len = self.ring().len();
        &self.arena[i * len..(i + 1) * len]
    }

    pub fn index_of(&self, m: &[u8]) -> Option<usize> {
        self.index.get(&self.ring().encode(m)).map(|&i| i as usize)
    }

    pub fn generator_inverses(&self) -> &[usize] {
        &self.generator_inverses
    }

    /// Checks closure under generator multiplication and inversion on a
    /// deterministic sample, and form preservation on every element.
    pub fn verify(&self, sample_stride: usize) -> Result<()> {
        let stride = sample_stride.max(1);
        for i in (0..self.order()).step_by(stride) {
            for &g in &self.generators {
                let _ = self.mul_checked(i, g)?;
            }
            let inv = self
                .ring()
                .inverse(self.matrix(i))
                .ok_or_else(|| Error::Consistency("singular element".into()))?;
            self.index_of(&inv)
                .ok_or_else(|| Error::Consistency("inverse missing".into()))?;
        }
        for i in 0..self.order() {
            if !self.setting.contains(self.matrix(i)) {
                return Err(Error::Consistency(format!("element {i} outside the group")));
            }
        }
        Ok(())
    }

    fn mul_checked(&self, a: usize, b: usize) -> Result<usize> {
        let mut buf = self.ring().zero();
        self.ring()
            .mul_into(self.matrix(a), self.matrix(b), &mut buf);
        self.index_of(&buf)
            .ok_or_else(|| Error::Consistency("table not closed under multiplication".into()))
    }

    /// Binary cache: header (spec, field, order, generators) then packed keys.
    pub fn write_cache(&self, path: &Path) -> Result<()> {
        let io = |e: std::io::Error| Error::Cache(e.to_string());
        let mut out = Vec::new();
        out.extend_from_slice(CACHE_MAGIC);
        out.extend_from_slice(&CACHE_VERSION.to_le_bytes());
        let spec = self.spec();
        out.push(spec.family.code());
        out.push(match spec.sign {
            None => 0,
            Some(Sign::Plus) => 1,
            Some(Sign::Minus) => 2,
        });
        out.push(spec.n as u8);
        out.extend_from_slice(&spec.q.to_le_bytes());
        out.push(spec.projective as u8);
        let fs = self.ring().field().spec();
        out.extend_from_slice(&fs.characteristic().to_le_bytes());
        out.extend_from_slice(&fs.degree().to_le_bytes());
        out.extend_from_slice(&(self.order() as u64).to_le_bytes());
        out.extend_from_slice(&(self.generators.len() as u32).to_le_bytes());
        for &g in &self.generators {
            out.extend_from_slice(&self.keys[g].to_le_bytes());
        }
        for k in &self.keys {
            out.extend_from_slice(&k.to_le_bytes());
        }
        let mut file = std::fs::File::create(path).map_err(io)?;
        file.write_all(&out).map_err(io)
    }

    pub fn read_cache(path: &Path) -> Result<Self> {
        let io = |e: std::io::Error| Error::Cache(e.to_string());
        let mut bytes = Vec::new();
        std::fs::File::open(path)
            .map_err(io)?
            .read_to_end(&mut bytes)
            .map_err(io)?;
        let mut rd = Reader {
            bytes: &bytes,
            pos: 0,
        };
        if rd.take(4)? != CACHE_MAGIC {
            return Err(Error::Cache("bad magic".into()));
        }
        if rd.u32()? != CACHE_VERSION {
            return Err(Error::Cache("unsupported version".into()));
        }
        let family =
            Family::from_code(rd.u8()?).ok_or_else(|| Error::Cache("bad family".into()))?;
        let sign = match rd.u8()? {
            0 => None,
            1 => Some(Sign::Plus),
            2 => Some(Sign::Minus),
            _ => return Err(Error::Cache("bad sign".into())),
        };
        let n = rd.u8()? as usize;
        let q = rd.u64()?;
        let projective = rd.u8()? != 0;
        let mut spec = GroupSpec::with_sign(family, sign, n, q)?;
        spec.projective = projective;
        let setting = ClassicalSetting::new(&spec)?;
        let (p, f) = (rd.u64()?, rd.u32()?);
        let fs = setting.field().spec();
        if (p, f) != (fs.characteristic(), fs.degree()) {
            return Err(Error::Cache("field encoding mismatch".into()));
        }
        let order = rd.u64()? as usize;
        let ngens = rd.u32()? as usize;
        let gens = (0..ngens).map(|_| rd.u128()).collect::<Result<Vec<_>>>()?;
        let keys = (0..order).map(|_| rd.u128()).collect::<Result<Vec<_>>>()?;
        if rd.pos != bytes.len() {
            return Err(Error::Cache("trailing bytes".into()));
        }
        if keys.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Cache("keys not strictly ascending".into()));
        }
        let expected = matrix_group_order(&spec)?;
        if order as u128 != expected {
            return Err(Error::Cache(format!(
                "order {order} != expected {expected}"
            )));
        }
        GroupTable::from_keys(setting, keys, &gens)
    }
}

const CACHE_MAGIC: &[u8; 4] = b"DVCG";
const CACHE_VERSION: u32 = 1;

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self.pos + n;
        if end > self.bytes.len() {
            return Err(Error::Cache("truncated file".into()));
        }
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }
    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }
    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
    fn u128(&mut self) -> Result<u128> {
        Ok(u128::from_le_bytes(self.take(16)?.try_into().unwrap()))
    }
}

impl FiniteGroup for GroupTable {
    fn order(&self) -> usize {
        self.keys.len()
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_checked(a, b).expect("closed table")
    }

    fn inv(&self, a: usize) -> usize {
        let m = self.ring().inverse(self.matrix(a)).expect("invertible");
        self.index_of(&m).expect("closed table")
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn commutes(&self, a: usize, b: usize) -> bool {
        let r = self.ring();
        let mut ab = r.zero();
        let mut ba = r.zero();
        r.mul_into(self.matrix(a), self.matrix(b), &mut ab);
        r.mul_into(self.matrix(b), self.matrix(a), &mut ba);
        ab == ba
    }

    fn conjugate_by_generator(&self, x: usize, k: usize) -> usize {
        let r = self.ring();
        let mut t = r.zero();
        let mut out = r.zero();
        r.mul_into(
            self.matrix(self.generator_inverses[k]),
            self.matrix(x),
            &mut t,
        );
        r.mul_into(&t, self.matrix(self.generators[k]), &mut out);
        self.index_of(&out).expect("closed table")
    }
}
