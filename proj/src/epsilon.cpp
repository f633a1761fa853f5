// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/epsilon.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "cmcount/bigarith.hpp"
#include "cmcount/errors.hpp"

namespace cmcount {

namespace {

int m4(long v)
{
    return static_cast<int>(((v % 4) + 4) % 4);
}

int m4(const mpz_class &v)
{
    return static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), 4));
}

struct Sl2Tables {
    std::vector<Mat2Z4> group;
    std::vector<Mat2Z4> commutator;
    std::set<Mat2Z4> commutator_set;
};

const Sl2Tables &tables()
{
    static const Sl2Tables t = [] {
        Sl2Tables r;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    for (int d = 0; d < 4; ++d) {
                        Mat2Z4 M{{a, b, c, d}};
                        if (M.det() == 1)
                            r.group.push_back(M);
                    }
        std::set<Mat2Z4> C;
        for (const auto &A : r.group)
            for (const auto &B : r.group)
                C.insert(A * B * A.inverse() * B.inverse());
        // close under products
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Mat2Z4> cur(C.begin(), C.end());
            for (const auto &A : cur)
                for (const auto &B : cur)
                    if (C.insert(A * B).second)
                        grew = true;
        }
        r.commutator_set = C;
        r.commutator.assign(C.begin(), C.end());
        if (r.group.size() != 48 || r.group.size() != 4 * r.commutator.size())
            fail(ErrorKind::Inconsistent, "unexpected commutator subgroup of SL2(Z/4Z)");
        return r;
    }();
    return t;
}

} // namespace

Mat2Z4 Mat2Z4::make(long a, long b, long c, long d)
{
    return Mat2Z4{{m4(a), m4(b), m4(c), m4(d)}};
}

int Mat2Z4::det() const
{
    return m4(static_cast<long>(e[0]) * e[3] - static_cast<long>(e[1]) * e[2]);
}

Mat2Z4 Mat2Z4::operator*(const Mat2Z4 &o) const
{
    return make(e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3], e[2] * o.e[0] + e[3] * o.e[2],
                e[2] * o.e[1] + e[3] * o.e[3]);
}

Mat2Z4 Mat2Z4::inverse() const
{
    return make(e[3], -e[1], -e[2], e[0]);
}

std::string Mu4::power_string() const
{
    return "i^" + std::to_string(k);
}

std::string Mu4::value_string() const
{
    static const char *names[] = {"1", "i", "-1", "-i"};
    return names[k];
}

const std::vector<Mat2Z4> &sl2_z4()
{
    return tables().group;
}

const std::vector<Mat2Z4> &sl2_z4_commutator()
{
    return tables().commutator;
}

Mu4 phi(const Mat2Z4 &M)
{
    if (M.det() != 1)
        fail(ErrorKind::InvalidArgument, "phi needs a determinant-one matrix");
    const auto &C = tables().commutator_set;
    for (int k = 0; k < 4; ++k)
        if (C.count(Mat2Z4::make(1, -k, 0, 1) * M))
            return Mu4::of(k);
    fail(ErrorKind::Inconsistent, "no coset of the commutator subgroup contains M");
}

Mat2Z4 normalized_q_matrix(const QuadElem &lambda)
{
    const mpz_class n = lambda.norm();
    if (mpz_even_p(n.get_mpz_t()))
        fail(ErrorKind::Precondition, "lambda must be a unit at 2 (odd norm)");
    const QuadElem t = lambda.disc().tau();
    const int T = m4(t.trace());
    const int N = m4(t.norm());
    const auto xy = lambda.tau_coords();
    const int x = m4(xy[0]), y = m4(xy[1]);
    const int ninv = m4(n); // n^-1 = n (mod 4) for odd n
    return Mat2Z4::make(x + y * T, -y * N, ninv * y, ninv * x);
}

Mu4 delta_tau(const QuadElem &lambda, int r_mod4)
{
    if (r_mod4 != 1 && r_mod4 != 3)
        fail(ErrorKind::InvalidArgument, "r must be odd");
    Mat2Z4 M = normalized_q_matrix(lambda);
    if (r_mod4 == 3) {
        const Mat2Z4 J = Mat2Z4::make(-1, 0, 0, 1);
        M = J * M * J.inverse();
    }
    return phi(M);
}

Mu4 epsilon_tau(const QuadElem &lambda, int r_mod4)
{
    const Discriminant &disc = lambda.disc();
    const mpz_class n = lambda.norm();
    if (mpz_even_p(n.get_mpz_t()))
        fail(ErrorKind::Precondition, "lambda must be a unit at 2 (odd norm)");
    const long half = static_cast<long>(mpz_fdiv_ui(mpz_class((n - 1) / 2).get_mpz_t(), 4));
    Mu4 base = delta_tau(lambda, 1);
    if (disc.is_4or8())
        base = Mu4::of(half) * base;
    if (r_mod4 == 1)
        return base;
    if (r_mod4 != 3)
        fail(ErrorKind::InvalidArgument, "r must be odd");
    if (disc.is_4or8())
        return (half & 1) ? base * Mu4::of(2) : base;
    return base.conj();
}

std::vector<ResidueClass> unit_classes(const Discriminant &disc)
{
    std::vector<ResidueClass> out;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            ResidueClass rc{disc.value(), 4, x, y};
            if (mpz_odd_p(QuadElem::from_residue(rc).norm().get_mpz_t()))
                out.push_back(rc);
        }
    return out;
}

std::string sqrt_label(const ResidueClass &rc)
{
    if ((rc.D & 1) == 0)
        return rc.label();
    const Discriminant disc = Discriminant::make(rc.D);
    // candidates ordered by (|b|, |a|)
    static const int pairs[][2] = {{0, 0},  {1, 0},  {-1, 0}, {2, 0},  {0, 1},  {0, -1}, {1, 1},  {1, -1},
                                   {-1, 1}, {-1, -1}, {2, 1}, {2, -1}, {0, 2}, {1, 2},  {-1, 2}, {2, 2}};
    for (const auto &ab : pairs) {
        const int a = ab[0], b = ab[1];
        if (QuadElem::from_uv(disc, a, b).reduce(rc.modulus) == rc) {
            ResidueClass even{-4, rc.modulus, a < 0 ? a + 4 : a, b < 0 ? b + 4 : b};
            return even.label();
        }
    }
    return rc.label();
}

EpsilonTable epsilon_table(const Discriminant &disc)
{
    if (!disc.units_are_pm1())
        fail(ErrorKind::Precondition, "epsilon is not defined for D = -3, -4", Reason::UnitGroup);
    EpsilonTable table;
    table.D = disc.value();
    table.keyed_by_cube = disc.is_odd();
    std::map<ResidueClass, Mu4> keyed;
    for (const auto &rc : unit_classes(disc)) {
        const QuadElem lambda = QuadElem::from_residue(rc);
        const Mu4 e = epsilon_tau(lambda);
        const ResidueClass key = table.keyed_by_cube ? lambda.pow(3).reduce(4) : rc;
        auto [it, fresh] = keyed.emplace(key, e);
        if (!fresh && !(it->second == e))
            fail(ErrorKind::Inconsistent, "epsilon is not a function of lambda^3 (mod 4)");
    }
    for (int k : {0, 1, 2, 3})
        for (const auto &[rc, e] : keyed)
            if (e.k == k)
                table.rows.push_back(EpsilonRow{sqrt_label(rc), e});
    return table;
}

} // namespace cmcount
