#include <catch2/catch_amalgamated.hpp>

#include "bmweights/solver.hpp"

using namespace bmweights;

namespace {

SerreWeight w_of(const FieldDatum& fd, std::vector<int> s, long long twist) {
    SerreWeight w;
    w.s = std::move(s);
    w.twist = fd.reduce(twist, 1);
    return w;
}

}  // namespace

TEST_CASE("decomposition matrix at (3,1)") {
    FieldDatum fd(3, 1);
    DecompMatrix m = build_decomp_matrix(fd);
    REQUIRE(m.nrows() == 4);
    REQUIRE(m.ncols() == 6);
    // Rows in enumeration order: (0;0), (0;1), (1;0), (1;1).
    CHECK(m.row_weights[0] == w_of(fd, {0}, 0));
    CHECK(m.row_weights[1] == w_of(fd, {0}, 1));
    CHECK(m.row_weights[2] == w_of(fd, {1}, 0));
    CHECK(m.row_weights[3] == w_of(fd, {1}, 1));
    // Columns: scalar 0, scalar 1, ps(0,1), cusp 1, cusp 2, cusp 5.
    CHECK(m.col_support[0] == std::vector<int>{0});
    CHECK(m.col_support[1] == std::vector<int>{1});
    CHECK(m.col_support[2] == std::vector<int>{2, 3});
    CHECK(m.col_support[3] == std::vector<int>{3});
    CHECK(m.col_support[4] == std::vector<int>{0, 1});
    CHECK(m.col_support[5] == std::vector<int>{2});
    // Column sums 1,1,2,1,2,1: eight incidences in total.
    CHECK(m.kernel->basis.ncols() == 2);
}

TEST_CASE("canonical kernel basis at (3,1)") {
    FieldDatum fd(3, 1);
    DecompMatrix m = build_decomp_matrix(fd);
    const KernelEchelon& k = *m.kernel;
    REQUIRE(k.basis.ncols() == 2);
    REQUIRE(k.pivot_row == std::vector<int>{0, 2});
    // Z(scalar 0) + Z(scalar 1) - Z(cusp 2) = 0.
    CHECK(k.basis.cols[0] == std::vector<BigInt>{1, 1, 0, 0, -1, 0});
    // Z(ps(0,1)) - Z(cusp 1) - Z(cusp 5) = 0.
    CHECK(k.basis.cols[1] == std::vector<BigInt>{0, 0, 1, -1, 0, -1});
}

TEST_CASE("canonical solutions at (3,1)") {
    FieldDatum fd(3, 1);
    DecompMatrix m = build_decomp_matrix(fd);
    // [(0;0)] = Z(cusp 2) - Z(scalar 1).
    CHECK(solve_n(m, w_of(fd, {0}, 0)).coeffs == Coeffs{{1, -1}, {4, 1}});
    // [(0;1)] = Z(scalar 1).
    CHECK(solve_n(m, w_of(fd, {0}, 1)).coeffs == Coeffs{{1, 1}});
    // [(1;0)] = Z(cusp 5).
    CHECK(solve_n(m, w_of(fd, {1}, 0)).coeffs == Coeffs{{5, 1}});
    // [(1;1)] = Z(cusp 1).
    CHECK(solve_n(m, w_of(fd, {1}, 1)).coeffs == Coeffs{{3, 1}});
}

TEST_CASE("solve_n input validation") {
    FieldDatum fd(3, 1);
    DecompMatrix m = build_decomp_matrix(fd);
    CHECK_THROWS_AS(solve_n(m, w_of(fd, {2}, 0)), SteinbergInput);
    SerreWeight bogus;
    bogus.s = {0, 0};  // wrong length for f = 1
    bogus.twist = CharExponent{0, 1};
    CHECK_THROWS_AS(solve_n(m, bogus), std::invalid_argument);
}

TEST_CASE("solutions solve their systems on larger data") {
    for (auto [p, f] : {std::pair{3, 2}, {5, 1}, {7, 1}}) {
        FieldDatum fd(p, f);
        DecompMatrix m = build_decomp_matrix(fd);
        for (int i = 0; i < m.nrows(); ++i) {
            const SerreWeight& w = m.row_weights[static_cast<std::size_t>(i)];
            NSolution sol = solve_n(m, w);
            std::vector<BigInt> v = m.apply(sol.coeffs);
            for (int r = 0; r < m.nrows(); ++r)
                REQUIRE(v[static_cast<std::size_t>(r)] == ((r == i) ? 1 : 0));
            // Canonical means stable under a second normalization pass.
            NSolution again = solve_n(m, w);
            REQUIRE(again.coeffs == sol.coeffs);
        }
    }
}

TEST_CASE("orthogonality") {
    FieldDatum fd(3, 1);
    DecompMatrix m = build_decomp_matrix(fd);
    std::map<SerreWeight, NSolution> sols;
    for (const SerreWeight& w : m.row_weights) sols.emplace(w, solve_n(m, w));
    CHECK(verify_orthogonality(m, sols));

    // Tampering with one coefficient must break it.
    std::map<SerreWeight, NSolution> bad = sols;
    bad.at(w_of(fd, {0}, 1)).coeffs[0] += 1;
    CHECK_FALSE(verify_orthogonality(m, bad));

    // A missing row weight is an error, not a pass.
    std::map<SerreWeight, NSolution> partial = sols;
    partial.erase(w_of(fd, {1}, 1));
    CHECK_THROWS_AS(verify_orthogonality(m, partial), MissingSolution);
}

TEST_CASE("solutions are invariant under kernel perturbation of the input") {
    FieldDatum fd(3, 1);
    DecompMatrix m = build_decomp_matrix(fd);
    // Any representative of the solution coset reduces to the canonical one.
    const KernelEchelon& k = *m.kernel;
    NSolution canon = solve_n(m, w_of(fd, {0}, 0));
    std::vector<BigInt> x(static_cast<std::size_t>(m.ncols()), 0);
    for (const auto& [j, c] : canon.coeffs) x[static_cast<std::size_t>(j)] = c;
    for (int j = 0; j < k.basis.ncols(); ++j)
        for (int i = 0; i < m.ncols(); ++i)
            x[static_cast<std::size_t>(i)] += 3 * k.basis.at(i, j);
    detail::reduce_by_kernel(x, k);
    Coeffs back;
    for (int j = 0; j < m.ncols(); ++j)
        if (x[static_cast<std::size_t>(j)] != 0) back[j] = x[static_cast<std::size_t>(j)];
    CHECK(back == canon.coeffs);
}
