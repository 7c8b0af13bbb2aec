//! Group-spec strings and the built-in constructors.
//!
//! Grammar:
//!   cyclic:n | abelian:n1,n2,... | dihedral:2n | quaternion:8 |
//!   heisenberg:p | modular:p | wreath:p | product(specA,specB) |
//!   cayley:path

use super::{group_from_json, CayleyGroup, MAX_ORDER};
use crate::error::{Error, Result};

/// Parses a group-spec string and constructs the group.
pub fn make_group(spec: &str) -> Result<CayleyGroup> {
    let spec = spec.trim();
    let bad = |msg: &str| Error::BadSpec(spec.to_string(), msg.to_string());

    if let Some(inner) = spec
        .strip_prefix("product(")
        .and_then(|s| s.strip_suffix(')'))
    {
        // Commas may also belong to an abelian:... argument, so try every
        // top-level split until both halves parse.
        let mut last_err = bad("product needs two comma-separated specs");
        for (a, b) in split_top_level(inner) {
            match (make_group(a), make_group(b)) {
                (Ok(ga), Ok(gb)) => return direct_product(&ga, &gb),
                (Err(e), _) | (_, Err(e)) => last_err = e,
            }
        }
        return Err(last_err);
    }
    if let Some(path) = spec.strip_prefix("cayley:") {
        let text = std::fs::read_to_string(path)?;
        return group_from_json(&text);
    }
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| bad("expected kind:args"))?;
    match kind {
        "cyclic" => {
            let n: usize = arg
                .parse()
                .map_err(|_| bad("cyclic needs a positive integer"))?;
            if n == 0 {
                return Err(bad("cyclic order must be positive"));
            }
            cyclic(n)
        }
        "abelian" => {
            let orders: Vec<usize> = arg
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| bad("abelian needs comma-separated positive integers"))
                })
                .collect::<Result<_>>()?;
            if orders.is_empty() || orders.contains(&0) {
                return Err(bad("abelian orders must be positive"));
            }
            abelian(&orders)
        }
        "dihedral" => {
            let n: usize = arg
                .parse()
                .map_err(|_| bad("dihedral needs the group order"))?;
            if n < 2 || !n.is_multiple_of(2) {
                return Err(bad("dihedral order must be even and at least 2"));
            }
            dihedral(n)
        }
        "quaternion" => {
            if arg != "8" {
                return Err(bad("only quaternion:8 is supported"));
            }
            quaternion8()
        }
        "heisenberg" => {
            let p: usize = arg
                .parse()
                .map_err(|_| bad("heisenberg needs an odd prime"))?;
            if !is_prime(p) || p == 2 {
                return Err(bad(
                    "heisenberg needs an odd prime (exponent p requires p odd)",
                ));
            }
            heisenberg(p)
        }
        "modular" => {
            let p: usize = arg.parse().map_err(|_| bad("modular needs an odd prime"))?;
            if !is_prime(p) || p == 2 {
                return Err(bad("modular needs an odd prime"));
            }
            modular(p)
        }
        "wreath" => {
            let p: usize = arg.parse().map_err(|_| bad("wreath needs a prime"))?;
            if !is_prime(p) {
                return Err(bad("wreath needs a prime"));
            }
            if p > 3 {
                return Err(bad(
                    "wreath:p is rejected for p > 3 (order p^{p+1} exceeds the cap)",
                ));
            }
            wreath(p)
        }
        _ => Err(bad("unknown group kind")),
    }
}

/// All ways to split "a,b" at a top-level comma, respecting nested
/// parentheses.
fn split_top_level(s: &str) -> Vec<(&str, &str)> {
    let mut depth = 0usize;
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => out.push((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    out
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderCap(n, MAX_ORDER))
    } else {
        Ok(())
    }
}

fn cyclic(n: usize) -> Result<CayleyGroup> {
    check_order(n)?;
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = ((i + j) % n) as u16;
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    CayleyGroup::new(n, table, 0, Some(labels))
}

fn abelian(orders: &[usize]) -> Result<CayleyGroup> {
    let n: usize = orders.iter().product();
    check_order(n)?;
    let k = orders.len();
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut v = vec![0; k];
        for (t, &o) in orders.iter().enumerate().rev() {
            v[t] = idx % o;
            idx /= o;
        }
        v
    };
    let encode = |v: &[usize]| -> usize {
        let mut idx = 0;
        for (t, &o) in orders.iter().enumerate() {
            idx = idx * o + v[t] % o;
        }
        idx
    };
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        let vi = decode(i);
        for j in 0..n {
            let vj = decode(j);
            let sum: Vec<usize> = vi.iter().zip(&vj).map(|(a, b)| a + b).collect();
            table[i * n + j] = encode(&sum) as u16;
        }
    }
    let labels = (0..n)
        .map(|i| {
            let v = decode(i);
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    CayleyGroup::new(n, table, 0, Some(labels))
}

/// Dihedral group of the given order 2n: rotations r^i and reflections
/// r^i·s, with s·r·s = r⁻¹. Index = i + n·j for r^i s^j.
fn dihedral(order: usize) -> Result<CayleyGroup> {
    check_order(order)?;
    let n = order / 2;
    let idx = |i: usize, j: usize| i % n + n * (j % 2);
    let mut table = vec![0u16; order * order];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j+l}
                    let rot = if j == 0 {
                        (i + k) % n
                    } else {
                        (i + n - k % n) % n
                    };
                    table[idx(i, j) * order + idx(k, l)] = idx(rot, j + l) as u16;
                }
            }
        }
    }
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            if j == 0 {
                format!("r{}", i)
            } else {
                format!("r{}s", i)
            }
        })
        .collect();
    CayleyGroup::new(order, table, 0, Some(labels))
}

/// The quaternion group Q₈ = {±1, ±i, ±j, ±k}.
fn quaternion8() -> Result<CayleyGroup> {
    // Element = (sign, axis) with axes 1, i, j, k; index = axis + 4·(sign<0).
    let mul = |a: usize, b: usize| -> usize {
        let (sa, ua) = (a / 4, a % 4);
        let (sb, ub) = (b / 4, b % 4);
        // Axis products: table[ua][ub] = (sign flip, axis).
        const AX: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let (flip, axis) = AX[ua][ub];
        let sign = (sa + sb + flip) % 2;
        axis + 4 * sign
    };
    let mut table = vec![0u16; 64];
    for a in 0..8 {
        for b in 0..8 {
            table[a * 8 + b] = mul(a, b) as u16;
        }
    }
    let labels = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
        .map(String::from)
        .to_vec();
    CayleyGroup::new(8, table, 0, Some(labels))
}

/// Extraspecial group of order p³ and exponent p (p odd): triples
/// (a,b,c) with (a,b,c)·(a′,b′,c′) = (a+a′, b+b′, c+c′+a·b′).
fn heisenberg(p: usize) -> Result<CayleyGroup> {
    let n = p * p * p;
    check_order(n)?;
    let idx = |a: usize, b: usize, c: usize| (a % p) * p * p + (b % p) * p + c % p;
    let mut table = vec![0u16; n * n];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for x in 0..p {
                    for y in 0..p {
                        for z in 0..p {
                            table[idx(a, b, c) * n + idx(x, y, z)] =
                                idx(a + x, b + y, c + z + a * y) as u16;
                        }
                    }
                }
            }
        }
    }
    let labels = (0..n)
        .map(|i| format!("({},{},{})", i / (p * p), (i / p) % p, i % p))
        .collect();
    CayleyGroup::new(n, table, 0, Some(labels))
}

/// The modular group of order p³ and exponent p² (p odd):
/// ⟨a, b | a^{p²} = b^p = 1, b·a = a^{1+p}·b⟩. Index = i + p²·j for a^i b^j.
fn modular(p: usize) -> Result<CayleyGroup> {
    let p2 = p * p;
    let n = p2 * p;
    check_order(n)?;
    let idx = |i: usize, j: usize| (i % p2) + p2 * (j % p);
    // (1+p)^j mod p².
    let mut twist = vec![1usize; p];
    for j in 1..p {
        twist[j] = twist[j - 1] * (1 + p) % p2;
    }
    let mut table = vec![0u16; n * n];
    for i in 0..p2 {
        for j in 0..p {
            for k in 0..p2 {
                for l in 0..p {
                    // (a^i b^j)(a^k b^l) = a^{i + k(1+p)^j} b^{j+l}
                    table[idx(i, j) * n + idx(k, l)] = idx(i + k * twist[j], j + l) as u16;
                }
            }
        }
    }
    let labels = (0..n).map(|x| format!("a{}b{}", x % p2, x / p2)).collect();
    CayleyGroup::new(n, table, 0, Some(labels))
}

/// The regular wreath product Z_p ≀ Z_p: base functions f: Z_p → Z_p with
/// a cyclic shift on top; order p^{p+1}, maximal class.
fn wreath(p: usize) -> Result<CayleyGroup> {
    let base = p.pow(p as u32);
    let n = base * p;
    check_order(n)?;
    let decode = |mut f: usize| -> Vec<usize> {
        let mut v = vec![0; p];
        for slot in v.iter_mut() {
            *slot = f % p;
            f /= p;
        }
        v
    };
    let encode = |v: &[usize]| -> usize {
        let mut f = 0;
        for &x in v.iter().rev() {
            f = f * p + x % p;
        }
        f
    };
    let idx = |f: usize, i: usize| f + base * (i % p);
    let mut table = vec![0u16; n * n];
    for f in 0..base {
        let vf = decode(f);
        for i in 0..p {
            for g in 0..base {
                let vg = decode(g);
                for j in 0..p {
                    // (f, i)·(g, j) = (f + σ^i g, i + j) with (σ^i g)(k) = g(k − i).
                    let mut sum = vec![0usize; p];
                    for (k, s) in sum.iter_mut().enumerate() {
                        *s = vf[k] + vg[(k + p - i % p) % p];
                    }
                    table[idx(f, i) * n + idx(g, j)] = idx(encode(&sum), i + j) as u16;
                }
            }
        }
    }
    let labels = (0..n)
        .map(|x| {
            let v = decode(x % base);
            let parts: Vec<String> = v.iter().map(|t| t.to_string()).collect();
            format!("({};{})", parts.join(","), x / base)
        })
        .collect();
    CayleyGroup::new(n, table, 0, Some(labels))
}

fn direct_product(a: &CayleyGroup, b: &CayleyGroup) -> Result<CayleyGroup> {
    let n = a.order() * b.order();
    check_order(n)?;
    let nb = b.order();
    let idx = |x: u16, y: u16| x as usize * nb + y as usize;
    let mut table = vec![0u16; n * n];
    for x1 in a.elements() {
        for y1 in b.elements() {
            for x2 in a.elements() {
                for y2 in b.elements() {
                    table[idx(x1, y1) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2)) as u16;
                }
            }
        }
    }
    let labels = (0..n)
        .map(|i| {
            let (x, y) = ((i / nb) as u16, (i % nb) as u16);
            format!("({},{})", a.label(x), b.label(y))
        })
        .collect();
    CayleyGroup::new(
        n,
        table,
        idx(a.identity(), b.identity()) as u16,
        Some(labels),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::center;

    #[test]
    fn cyclic_one_is_trivial() {
        let g = make_group("cyclic:1").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn heisenberg3_shape() {
        let g = make_group("heisenberg:3").unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.prime(), Some(3));
        assert_eq!(g.exponent(), 3);
        // Class 2: non-abelian with central commutators.
        assert!(!g.is_abelian());
        let z = center(&g);
        for x in g.elements() {
            for y in g.elements() {
                assert!(z.contains(g.commutator(x, y)));
            }
        }
    }

    #[test]
    fn product_order_and_center() {
        let g = make_group("product(cyclic:3,heisenberg:3)").unwrap();
        assert_eq!(g.order(), 81);
        assert_eq!(center(&g).len(), 9);
    }

    #[test]
    fn modular3_has_exponent_nine() {
        let g = make_group("modular:3").unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 9);
        assert!(!g.is_abelian());
        assert_eq!(center(&g).len(), 3);
    }

    #[test]
    fn wreath2_is_dihedral8() {
        let g = make_group("wreath:2").unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.exponent(), 4);
        assert_eq!(center(&g).len(), 2);
        // D₄ has 2 elements of order 4, Q₈ has 6.
        let order4 = g.elements().filter(|&x| g.element_order(x) == 4).count();
        assert_eq!(order4, 2);
    }

    #[test]
    fn wreath_rejected_above_three() {
        assert!(make_group("wreath:5").is_err());
    }

    #[test]
    fn malformed_specs_rejected() {
        for s in [
            "",
            "cyclic:",
            "cyclic:0",
            "nope:3",
            "dihedral:7",
            "quaternion:16",
            "heisenberg:2",
            "heisenberg:4",
            "product(cyclic:3)",
            "abelian:",
        ] {
            assert!(make_group(s).is_err(), "spec {s:?} should fail");
        }
    }

    #[test]
    fn nested_products_parse() {
        let g = make_group("product(product(cyclic:2,cyclic:2),cyclic:3)").unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.is_abelian());
    }

    #[test]
    fn order_cap_enforced() {
        assert!(make_group("cyclic:513").is_err());
        assert!(make_group("cyclic:512").is_ok());
    }
}
