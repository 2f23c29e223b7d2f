#pragma once

#include "voa/structure.hpp"

namespace voa {

/// a_(-1) Omega = a and a_(n) Omega = 0 (n >= 0) for every basis a up to cutoff.
Report check_creation(const Field& f, int cutoff);

/// (L_{-1} a)_(n) b = -n a_(n-1) b for basis a up to a_cutoff and b up to
/// b_cutoff, all n giving results of weight 0..b_cutoff; also the grading
/// wt(a_(n) b) = wt a + wt b - n - 1.
Report check_translation(const Field& f, int a_cutoff, int b_cutoff);

/// [J_m, J_n] = m delta_{m,-n} and (J_{-1} Omega)_(m) = J_m on weight <= cutoff, |m|, |n| <= range.
Report check_heisenberg(const Field& f, int cutoff, int range);

/// Virasoro relations with c = 1 for L_m from the quadratic formula, and
/// nu_(m+1) = L_m through the engine.
Report check_virasoro(const Field& f, int cutoff, int range);

/// [L_m, J_n] = -n J_{m+n}.
Report check_mixed(const Field& f, int cutoff, int range);

/// u primary (L_m u = 0, m = 1..6), L_{-2} nu and L_{-4} Omega formulas,
/// plus the primary-basis characterisation of u at weight 4.
Report check_weight4_primary(const Field& f);

/// Lattice products (e^{+-g})_(g^2-2) e^{-+g} and (e^g_b)_(g^2-5) e^g_b for b in {1, i}.
Report check_lattice_products(int lattice_n, int m = 1);

/// u as a combination of L_{-2} nu, L_{-4} Omega and v_g by exact solve.
Report check_linear_combination(int lattice_n, int m = 1);

/// Quasi-primary dimension at weight 2 and the N = 2 kernel span.
Report check_quasi_primary_weight2(int lattice_n);

/// Z_k fixed dims against V_{L_{2Nk^2}}, T fixed dims against p(w).
Report check_fixed_points(int lattice_n, int k, int cutoff);

/// close_subalgebra({nu, Omega (x) (e^alpha + e^-alpha)}) against the phi-fixed space.
Report check_plus_generators(int lattice_n, int cutoff);

/// Certification of omega_t at the given angles plus the tensor split checks.
Report check_half_virasoro(int cutoff);

}  // namespace voa
