//! Counting identities relating a Cayley graph, its clique graph and the
//! automorphisms of the connection set.

use alloc::vec::Vec;

use num_bigint::BigUint;

/// Numbers the identities are evaluated on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityInputs {
    pub gamma_vertices: BigUint,
    /// Triangle count of Γ, when it was computed.
    pub triangles: Option<BigUint>,
    /// Γ is locally `2K_q`.
    pub q: usize,
    pub sigma_vertices: BigUint,
    pub sigma_valency: usize,
    pub h_order: BigUint,
    pub aut_hs_order: BigUint,
    /// Σ is claimed to be 3-arc-regular under `R(H) ⋊ Aut(H,S)`.
    pub three_arc_regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &'static str, lhs: BigUint, rhs: BigUint) -> IdentityCheck {
    IdentityCheck {
        name,
        holds: lhs == rhs,
        lhs,
        rhs,
    }
}

/// Failures are reported in the result, never raised.
pub fn consistency_identities(x: &IdentityInputs) -> IdentityReport {
    let mut checks = Vec::new();
    if let Some(t) = &x.triangles {
        // 3·#triangles = q(q-1)|V|, kept integral.
        let rhs = BigUint::from(x.q * x.q.saturating_sub(1)) * &x.gamma_vertices;
        checks.push(check("triangles", t * 3u32, rhs));
    }
    let k = BigUint::from(x.sigma_valency);
    if x.three_arc_regular && x.sigma_valency >= 1 {
        let k1 = &k - 1u32;
        checks.push(check(
            "three-arc-count",
            &x.h_order * &x.aut_hs_order,
            &x.sigma_vertices * &k * &k1 * &k1,
        ));
    }
    checks.push(check("clique-count", &x.sigma_vertices * &k, &x.h_order * 2u32));
    IdentityReport { checks }
}
