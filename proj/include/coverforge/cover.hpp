#pragma once

#include <map>
#include <string>
#include <vector>

#include "coverforge/groebner.hpp"
#include "coverforge/matrix.hpp"
#include "coverforge/polynomial.hpp"

namespace coverforge {

/// Input of the cover-homomorphism solver: the initial-ideal generators q of
/// a degree-d fiber (homogeneous quadrics in the fiber variables) and
/// optional linear trace-free constraints on the c unknowns.
struct CoverProblem {
    RingPtr fiber_ring;
    std::vector<Polynomial> q;
    std::vector<std::string> tracefree; // linear forms in the c names, as text
};

CoverProblem make_cover_problem(RingPtr fiber_ring, std::vector<Polynomial> q,
                                std::vector<std::string> tracefree = {});

/// Name grids for the unknowns of the z0-graded system. The combined ring
/// orders (z0, fiber vars, n, d, c) under degrevlex; c names follow the
/// generator-major convention c{i}{j} (generator i, fiber variable j), n names
/// are n{i}_{j} (syzygy i, generator j).
struct UnknownLayout {
    int m = 0;  // generators
    int r = 0;  // fiber variables
    int n2 = 0; // syzygies

    RingPtr big;    // z0, fiber, n, d, c
    RingPtr c_ring; // just the c grid, ascending (i,j)

    std::string n_name(int syz, int gen) const;
    std::string d_name(int gen) const;
    std::string c_name(int gen, int var) const;

    int big_z0() const { return 0; }
    int big_fiber(int j) const { return 1 + j; }
    int big_n(int syz, int gen) const { return 1 + r + syz * m + gen; }
    int big_d(int gen) const { return 1 + r + n2 * m + gen; }
    int big_c(int gen, int var) const { return 1 + r + n2 * m + m + gen * r + var; }

    int cring_c(int gen, int var) const { return gen * r + var; }
};

/// Step (1): the syzygy matrix l of q and the expanded product
/// E = (q - z̄Cz0 - Dz0^2)(l + Nz0) over the combined ring.
struct BuiltSystem {
    UnknownLayout layout;
    PolyMatrix l; // m x n2, linear fiber entries, over the combined ring
    PolyMatrix E; // 1 x n2
};

BuiltSystem build_system(const CoverProblem& problem);

/// Full output of the z0-graded algorithm.
struct CoverRelations {
    CoverProblem problem;
    UnknownLayout layout;
    PolyMatrix l; // over the combined ring

    /// Step (2): every n as a linear form in the surviving c's, plus the
    /// residual linear relations among the c's (trace-free ones included).
    std::map<std::string, Polynomial> n_subst;  // values in c_ring
    std::vector<Polynomial> linear_relations;   // c_ring, reduced forms
    std::vector<int> free_c;                    // c_ring indices, ascending
    std::vector<Polynomial> c_param;            // per c_ring var: its free-c form

    /// Step (3): d_i = h_i(c) and the ideal of q-relations.
    std::vector<Polynomial> d_exprs;             // c_ring, quadratic
    std::vector<Polynomial> quadratic_relations; // minimal I_q generators

    /// Step (4): the DN cubics and their normal forms.
    std::vector<Polynomial> cubics;        // c_ring (after all substitutions)
    std::vector<Polynomial> cubic_residues;
    bool cubics_ok = false;

    /// The parametrized deformation matrix C (m x r over c_ring) and N.
    PolyMatrix c_matrix;
    PolyMatrix n_matrix; // m x n2

    /// Groebner basis of the quadratic relations (empty elements if none).
    GroebnerBasis iq_basis;

    Ideal iq_ideal() const { return Ideal::make(layout.c_ring, quadratic_relations); }
};

CoverRelations cover_relations(const CoverProblem& problem);

/// Extends values for the free c's to the full c grid via the solved
/// parametrization. Keys of `free_values` are c names.
std::vector<Rational> full_c_point(const CoverRelations& rel,
                                   const std::map<std::string, Rational>& free_values);

/// Flat-deformation check at a rational point of V(I_q): builds
/// f_i = q_i - sum c*_ij z_j - h_i(c*), reports the quotient dimension, the
/// graded Betti table of the homogenized ideal, and whether the initial ideal
/// equals (q); all three against the undeformed reference.
struct FiberReport {
    int points = 0;             // k-dimension of the fiber algebra
    int reference_points = 0;   // same for the cone over (q)
    std::vector<int> betti;
    std::vector<int> reference_betti;
    bool betti_matches = false;
    bool initial_matches = false;
    bool ok() const {
        return points == reference_points && betti_matches && initial_matches;
    }
};

/// `reference` (the resolution of the cone over q in the z0-extended ring)
/// may be supplied to avoid recomputing it per sample.
FiberReport verify_fiber(const CoverRelations& rel, const std::vector<Rational>& c_values,
                         const Resolution* reference = nullptr);

/// The homogenized reference data of the undeformed cone: resolution of (q)
/// in the (z0, fiber) ring.
Resolution cone_resolution(const CoverProblem& problem);

} // namespace coverforge
