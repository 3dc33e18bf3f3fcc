#include "sepdim/rank.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "sepdim/eigen_bridge.hpp"

namespace sepdim {
namespace {

// Bareiss update over Z: a[i][j] <- (a[i][j]*pivot - a[i][c]*a[p][j]) / prev.
// The division is exact: after k pivots every entry is a (k+1)x(k+1) minor
// of the original matrix. Rows are addressed through a permutation so a
// "swap" never moves data.
std::vector<int> profile_real(std::vector<mpz_class>& a, int rows, int cols) {
    std::vector<int> perm(rows);
    for (int i = 0; i < rows; ++i) perm[i] = i;
    auto at = [&](int i, int j) -> mpz_class& {
        return a[static_cast<size_t>(perm[i]) * cols + j];
    };

    std::vector<int> pivots;
    mpz_class prev(1);
    mpz_t t;
    mpz_init(t);
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int found = -1;
        for (int i = pr; i < rows; ++i) {
            if (sgn(at(i, c)) != 0) {
                found = i;
                break;
            }
        }
        if (found < 0) continue;
        std::swap(perm[pr], perm[found]);

        const mpz_class& p = at(pr, c);
        const bool prev_is_one = (prev == 1);
        for (int i = pr + 1; i < rows; ++i) {
            mpz_class& mic = at(i, c);
            if (sgn(mic) == 0) {
                // Scale-only branch of the same update formula.
                for (int j = c + 1; j < cols; ++j) {
                    mpz_class& e = at(i, j);
                    if (sgn(e) == 0) continue;
                    mpz_mul(t, e.get_mpz_t(), p.get_mpz_t());
                    if (prev_is_one)
                        mpz_set(e.get_mpz_t(), t);
                    else
                        mpz_divexact(e.get_mpz_t(), t, prev.get_mpz_t());
                }
                continue;
            }
            for (int j = c + 1; j < cols; ++j) {
                mpz_class& e = at(i, j);
                mpz_mul(t, e.get_mpz_t(), p.get_mpz_t());
                mpz_submul(t, mic.get_mpz_t(), at(pr, j).get_mpz_t());
                if (prev_is_one)
                    mpz_set(e.get_mpz_t(), t);
                else
                    mpz_divexact(e.get_mpz_t(), t, prev.get_mpz_t());
            }
            mic = 0;
        }
        prev = p;
        pivots.push_back(c);
        ++pr;
    }
    mpz_clear(t);
    return pivots;
}

struct ZGauss {
    mpz_class re, im;
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

// Same elimination over the Gaussian integers Z[i]. Division by the previous
// pivot q is exact in Z[i]; it is carried out as multiplication by conj(q)
// followed by componentwise exact division by |q|^2.
std::vector<int> profile_complex(std::vector<ZGauss>& a, int rows, int cols) {
    std::vector<int> perm(rows);
    for (int i = 0; i < rows; ++i) perm[i] = i;
    auto at = [&](int i, int j) -> ZGauss& {
        return a[static_cast<size_t>(perm[i]) * cols + j];
    };

    std::vector<int> pivots;
    ZGauss prev{mpz_class(1), mpz_class(0)};
    mpz_class prev_norm(1);
    mpz_t tre, tim, u;
    mpz_init(tre);
    mpz_init(tim);
    mpz_init(u);

    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int found = -1;
        for (int i = pr; i < rows; ++i) {
            if (!at(i, c).is_zero()) {
                found = i;
                break;
            }
        }
        if (found < 0) continue;
        std::swap(perm[pr], perm[found]);

        const ZGauss p = at(pr, c);
        const bool prev_is_one = (sgn(prev.im) == 0 && prev.re == 1);
        for (int i = pr + 1; i < rows; ++i) {
            ZGauss mic = at(i, c);
            for (int j = c + 1; j < cols; ++j) {
                ZGauss& e = at(i, j);
                const ZGauss& g = at(pr, j);
                // t = e*p - mic*g
                mpz_mul(tre, e.re.get_mpz_t(), p.re.get_mpz_t());
                mpz_submul(tre, e.im.get_mpz_t(), p.im.get_mpz_t());
                mpz_submul(tre, mic.re.get_mpz_t(), g.re.get_mpz_t());
                mpz_addmul(tre, mic.im.get_mpz_t(), g.im.get_mpz_t());
                mpz_mul(tim, e.re.get_mpz_t(), p.im.get_mpz_t());
                mpz_addmul(tim, e.im.get_mpz_t(), p.re.get_mpz_t());
                mpz_submul(tim, mic.re.get_mpz_t(), g.im.get_mpz_t());
                mpz_submul(tim, mic.im.get_mpz_t(), g.re.get_mpz_t());
                if (prev_is_one) {
                    mpz_set(e.re.get_mpz_t(), tre);
                    mpz_set(e.im.get_mpz_t(), tim);
                } else {
                    // (t * conj(prev)) / |prev|^2
                    mpz_mul(u, tre, prev.re.get_mpz_t());
                    mpz_addmul(u, tim, prev.im.get_mpz_t());
                    mpz_divexact(e.re.get_mpz_t(), u, prev_norm.get_mpz_t());
                    mpz_mul(u, tim, prev.re.get_mpz_t());
                    mpz_submul(u, tre, prev.im.get_mpz_t());
                    mpz_divexact(e.im.get_mpz_t(), u, prev_norm.get_mpz_t());
                }
            }
            at(i, c) = ZGauss{mpz_class(0), mpz_class(0)};
        }
        prev = p;
        prev_norm = prev.re * prev.re + prev.im * prev.im;
        pivots.push_back(c);
        ++pr;
    }
    mpz_clear(tre);
    mpz_clear(tim);
    mpz_clear(u);
    return pivots;
}

} // namespace

std::vector<int> column_rank_profile(const ExactMatrix& m) {
    if (m.empty()) return {};
    const int rows = m.rows();
    const int cols = m.cols();

    bool all_real = true;
    for (const auto& z : m.data()) {
        if (sgn(z.im) != 0) {
            all_real = false;
            break;
        }
    }

    // Row scaling by the lcm of the row's denominators: rank-preserving and
    // lands in Z or Z[i].
    if (all_real) {
        std::vector<mpz_class> a(static_cast<size_t>(rows) * cols);
        for (int i = 0; i < rows; ++i) {
            mpz_class l(1);
            for (int j = 0; j < cols; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).re.get_den_mpz_t());
            for (int j = 0; j < cols; ++j) {
                const Rational& q = m(i, j).re;
                mpz_class scaled = l / q.get_den();
                a[static_cast<size_t>(i) * cols + j] = q.get_num() * scaled;
            }
        }
        return profile_real(a, rows, cols);
    }

    std::vector<ZGauss> a(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (int j = 0; j < cols; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).re.get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).im.get_den_mpz_t());
        }
        for (int j = 0; j < cols; ++j) {
            const GaussianRational& z = m(i, j);
            a[static_cast<size_t>(i) * cols + j] =
                ZGauss{z.re.get_num() * mpz_class(l / z.re.get_den()),
                       z.im.get_num() * mpz_class(l / z.im.get_den())};
        }
    }
    return profile_complex(a, rows, cols);
}

int rank_exact(const ExactMatrix& m) {
    return static_cast<int>(column_rank_profile(m).size());
}

int rank_numeric(const ComplexMatrix& m, double rel_tol) {
    if (m.empty()) return 0;
    Eigen::MatrixXcd em = to_eigen(m);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(em);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    const double cut = rel_tol * sv(0);
    int r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > cut) ++r;
    return r;
}

} // namespace sepdim
