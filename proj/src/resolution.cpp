#include <algorithm>

#include "coverforge/errors.hpp"
#include "coverforge/groebner.hpp"

namespace coverforge {

namespace {

bool is_nonzero_constant(const Polynomial& p) {
    return !p.is_zero() && p.degree() == 0;
}

// Cancels the unit entry at (i, j) of steps[s] by exact row/column operations,
// keeping all consecutive products zero, then deletes the matched generator
// pair. P = steps[s-1] (absent for s = 0), B = steps[s+1] (absent at the end).
void cancel_unit(std::vector<PolyMatrix>& steps,
                 std::vector<std::vector<int>>& twists, int s, int i, int j) {
    if (s == 0) throw precondition_error("free resolution of the unit ideal");
    PolyMatrix& A = steps[s];
    Rational uc = A.at(i, j).leading_coef();

    // Clear row i (column ops on A, mirrored as row ops on B).
    for (int j2 = 0; j2 < A.cols(); ++j2) {
        if (j2 == j || A.at(i, j2).is_zero()) continue;
        Polynomial lambda = A.at(i, j2).scaled(uc.inverse());
        for (int r = 0; r < A.rows(); ++r)
            A.set(r, j2, A.at(r, j2) - lambda * A.at(r, j));
        if (s + 1 < static_cast<int>(steps.size())) {
            PolyMatrix& B = steps[s + 1];
            for (int c = 0; c < B.cols(); ++c)
                B.set(j, c, B.at(j, c) + lambda * B.at(j2, c));
        }
    }
    // Clear column j (row ops on A, mirrored as column ops on P).
    for (int i2 = 0; i2 < A.rows(); ++i2) {
        if (i2 == i || A.at(i2, j).is_zero()) continue;
        Polynomial mu = A.at(i2, j).scaled(uc.inverse());
        for (int c = 0; c < A.cols(); ++c)
            A.set(i2, c, A.at(i2, c) - mu * A.at(i, c));
        PolyMatrix& P = steps[s - 1];
        for (int r = 0; r < P.rows(); ++r)
            P.set(r, i, P.at(r, i) + mu * P.at(r, i2));
    }

    auto drop_row = [&](PolyMatrix& M, int row) {
        PolyMatrix out(M.ring(), M.rows() - 1, M.cols());
        for (int r = 0, rr = 0; r < M.rows(); ++r) {
            if (r == row) continue;
            for (int c = 0; c < M.cols(); ++c) out.set(rr, c, M.at(r, c));
            ++rr;
        }
        M = out;
    };
    auto drop_col = [&](PolyMatrix& M, int col) {
        PolyMatrix out(M.ring(), M.rows(), M.cols() - 1);
        for (int c = 0, cc = 0; c < M.cols(); ++c) {
            if (c == col) continue;
            for (int r = 0; r < M.rows(); ++r) out.set(r, cc, M.at(r, c));
            ++cc;
        }
        M = out;
    };

    if (s + 1 < static_cast<int>(steps.size())) {
        for (int c = 0; c < steps[s + 1].cols(); ++c)
            if (!steps[s + 1].at(j, c).is_zero())
                throw internal_error("resolution minimization left a nonzero row");
        drop_row(steps[s + 1], j);
    }
    for (int r = 0; r < steps[s - 1].rows(); ++r)
        if (!steps[s - 1].at(r, i).is_zero())
            throw internal_error("resolution minimization left a nonzero column");
    drop_col(steps[s - 1], i);
    drop_row(A, i);
    drop_col(A, j);
    twists[s + 1].erase(twists[s + 1].begin() + j);
    twists[s].erase(twists[s].begin() + i);
}

void minimize(std::vector<PolyMatrix>& steps, std::vector<std::vector<int>>& twists) {
    bool again = true;
    while (again) {
        again = false;
        for (int s = 0; s < static_cast<int>(steps.size()) && !again; ++s)
            for (int i = 0; i < steps[s].rows() && !again; ++i)
                for (int j = 0; j < steps[s].cols() && !again; ++j)
                    if (is_nonzero_constant(steps[s].at(i, j))) {
                        cancel_unit(steps, twists, s, i, j);
                        again = true;
                    }
        while (!steps.empty() && (steps.back().cols() == 0 || steps.back().rows() == 0)) {
            steps.pop_back();
            twists.pop_back();
        }
    }
}

} // namespace

std::string Resolution::betti_string() const {
    std::string out;
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(betti[i]);
    }
    return out;
}

Resolution free_resolution(const Ideal& ideal, int max_steps) {
    for (const auto& g : ideal.generators)
        if (!g.is_homogeneous())
            throw precondition_error("free resolution requires a homogeneous ideal");
    Resolution res;
    res.ring = ideal.ring;
    res.twists.push_back({0});

    std::vector<Polynomial> gens = min_generators(ideal.generators);
    if (gens.empty()) {
        res.betti = {1};
        return res;
    }

    // steps[0]: the 1 x b1 row of minimal generators of I.
    PolyMatrix first(ideal.ring, 1, static_cast<int>(gens.size()));
    std::vector<int> first_twists;
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
        first.set(0, j, gens[j]);
        first_twists.push_back(-gens[j].degree());
    }
    res.steps.push_back(first);
    res.twists.push_back(first_twists);

    // current = columns of the last matrix, as elements of the previous free
    // module. F_k = (+) S(twists[k][i]); a generator of S(t) has degree -t.
    std::vector<FreeModuleElement> current;
    for (const auto& g : gens) current.push_back({g});

    while (true) {
        if (static_cast<int>(res.steps.size()) >= max_steps) {
            std::vector<int> amb_deg;
            for (int t : res.twists[res.steps.size() - 1]) amb_deg.push_back(-t);
            res.truncated = !module_syzygies(res.ring, static_cast<int>(current[0].size()),
                                             current, amb_deg)
                                 .empty();
            break;
        }
        const std::vector<int>& amb_tw = res.twists[res.steps.size() - 1];
        std::vector<int> amb_deg;
        for (int t : amb_tw) amb_deg.push_back(-t);
        auto syz =
            module_syzygies(res.ring, static_cast<int>(current[0].size()), current, amb_deg);
        if (syz.empty()) break;

        const int rows = static_cast<int>(current.size());
        const int cols = static_cast<int>(syz.size());
        const std::vector<int>& col_tw = res.twists.back(); // twists of F_level
        PolyMatrix M(res.ring, rows, cols);
        std::vector<int> new_twists;
        for (int j = 0; j < cols; ++j) {
            int deg = 0;
            for (int r = 0; r < rows; ++r) {
                M.set(r, j, syz[j][r]);
                if (!syz[j][r].is_zero()) deg = syz[j][r].degree() - col_tw[r];
            }
            new_twists.push_back(-deg);
        }
        res.steps.push_back(M);
        res.twists.push_back(new_twists);
        current = std::move(syz);
    }

    minimize(res.steps, res.twists);

    // Exactness witnesses: consecutive products vanish, no constant survives.
    for (std::size_t s = 0; s + 1 < res.steps.size(); ++s)
        if (!mat_mul(res.steps[s], res.steps[s + 1]).is_zero())
            throw internal_error("resolution steps do not compose to zero");
    for (const auto& M : res.steps)
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j)
                if (is_nonzero_constant(M.at(i, j)))
                    throw internal_error("minimized resolution kept a constant entry");

    res.betti.push_back(1);
    for (const auto& M : res.steps) res.betti.push_back(M.cols());
    return res;
}

} // namespace coverforge
