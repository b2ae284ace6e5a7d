#include "modecert/frobenius.hpp"

#include <stdexcept>

namespace modecert {

namespace {

const GaussianRational kHalf(Rational(1, 2));

UPoly lambdaVar() { return UPoly::variable(); }

UPoly linearFactor(long j) {
    // lambda + j
    return UPoly(std::vector<GaussianRational>{GaussianRational(Rational(j)), GaussianRational(1)});
}

}  // namespace

GaussianRational LambdaRational::evaluate(const GaussianRational& lam) const {
    GaussianRational den(Rational(1));
    for (long j : poleOffsets) {
        GaussianRational f = lam + GaussianRational(Rational(j));
        if (f.isZero()) throw std::domain_error("LambdaRational: evaluation at a pole");
        den *= f;
    }
    return num.evaluate(lam) / den;
}

UPoly LambdaRational::denominator() const {
    UPoly d(GaussianRational(1));
    for (long j : poleOffsets) d *= linearFactor(j);
    return d;
}

RationalFunctionForm LambdaRational::toRationalFunctionForm() const {
    RationalFunctionForm out;
    if (poleOffsets.empty()) {
        out.poly = num;
        return out;
    }
    UPoly den = denominator();
    auto [quot, rem] = polyDivMod(num, den);
    out.poly = quot;
    // simple poles: residue at -j is rem(-j)/den'(-j)
    UPoly denPrime = den.derivative();
    for (long j : poleOffsets) {
        GaussianRational at(Rational(-j));
        GaussianRational res = rem.evaluate(at) / denPrime.evaluate(at);
        out.poles.push_back({at, res});
    }
    return out;
}

UPoly ratioPolyAtZeroNumerator(long n) {
    // n^2 + (lambda + 3/2) n + (lambda^2 + 3 lambda)/4 - 1/2
    std::vector<GaussianRational> c(3);
    c[0] = GaussianRational(Rational(n * n) + Rational(3 * n, 2) - Rational(1, 2));
    c[1] = GaussianRational(Rational(n) + Rational(3, 4));
    c[2] = GaussianRational(Rational(1, 4));
    return UPoly(std::move(c));
}

UPoly ratioPolyAtOneNumerator(long n) {
    std::vector<GaussianRational> c(3);
    c[0] = GaussianRational(Rational(n * n) + Rational(3 * n, 2) - Rational(7, 2));
    c[1] = GaussianRational(Rational(n) + Rational(3, 4));
    c[2] = GaussianRational(Rational(1, 4));
    return UPoly(std::move(c));
}

GaussianRational ratioAtZero(long n, const GaussianRational& lam) {
    GaussianRational den = GaussianRational(Rational(n + 1)) * (lam + GaussianRational(Rational(n)));
    if (den.isZero()) throw std::domain_error("ratioAtZero: lambda is a nonpositive integer pole");
    return ratioPolyAtZeroNumerator(n).evaluate(lam) / den;
}

GaussianRational ratioAtOne(long n, const GaussianRational& lam) {
    Rational den = Rational(n + 1) * (Rational(n) + Rational(5, 2));
    return ratioPolyAtOneNumerator(n).evaluate(lam) / GaussianRational(den);
}

SeriesCoefficients seriesAtZeroSymbolic(int N, Normalization norm) {
    // a_0 = 1; a_{n+1} = p_n a_n - (1/((n+1)(n+lambda))) sum_{k<n} ((n-k+1)/2^(n-k)) a_k.
    // Writing a_n = N_n / prod_{j<n}(lambda+j), the step becomes
    //   N_{n+1} = (1/(n+1)) [ Pnum_n N_n - sum_k w_{n,k} N_k prod_{j=k}^{n-1}(lambda+j) ].
    std::vector<UPoly> numerators(static_cast<size_t>(N) + 1);
    numerators[0] = UPoly(GaussianRational(1));
    for (int n = 0; n < N; ++n) {
        UPoly acc = ratioPolyAtZeroNumerator(n) * numerators[n];
        UPoly cofactor(GaussianRational(1));
        for (int k = n - 1; k >= 0; --k) {
            cofactor *= linearFactor(k);
            Rational w = Rational(n - k + 1) / Rational(2).pow(n - k);
            acc -= (numerators[k] * cofactor).scaled(GaussianRational(w));
        }
        numerators[n + 1] = acc.scaled(GaussianRational(Rational(1, n + 1)));
    }
    SeriesCoefficients out;
    out.expansionPoint = 0;
    out.normalization = norm;
    out.symbolic.reserve(numerators.size());
    for (int n = 0; n <= N; ++n) {
        LambdaRational f;
        f.num = numerators[n];
        for (long j = 0; j < n; ++j) f.poleOffsets.push_back(j);
        if (norm == Normalization::ValueLambda) {
            if (!f.poleOffsets.empty() && f.poleOffsets.front() == 0)
                f.poleOffsets.erase(f.poleOffsets.begin());
            else
                f.num = f.num * lambdaVar();
        }
        out.symbolic.push_back(std::move(f));
    }
    return out;
}

SeriesCoefficients seriesAtZero(const GaussianRational& lam, int N, Normalization norm) {
    std::vector<GaussianRational> a(static_cast<size_t>(N) + 1);
    a[0] = GaussianRational(1);
    for (int n = 0; n < N; ++n) {
        GaussianRational next = ratioAtZero(n, lam) * a[n];
        GaussianRational den = GaussianRational(Rational(n + 1)) * (lam + GaussianRational(Rational(n)));
        GaussianRational sum(Rational(0));
        for (int k = 0; k <= n - 1; ++k)
            sum += a[k] * GaussianRational(Rational(n - k + 1) / Rational(2).pow(n - k));
        a[n + 1] = next - sum / den;
    }
    if (norm == Normalization::ValueLambda)
        for (auto& v : a) v *= lam;
    SeriesCoefficients out;
    out.expansionPoint = 0;
    out.normalization = norm;
    out.values = std::move(a);
    return out;
}

std::vector<UPoly> seriesAtOneSymbolic(int N) {
    std::vector<UPoly> b(static_cast<size_t>(N) + 1);
    b[0] = UPoly(GaussianRational(1));
    for (int n = 0; n < N; ++n) {
        Rational den = Rational(n + 1) * (Rational(n) + Rational(5, 2));
        UPoly next = (ratioPolyAtOneNumerator(n) * b[n]).scaled(GaussianRational(den.inverse()));
        UPoly sum;
        for (int k = 0; k <= n - 1; ++k) {
            Rational w = Rational(4 * (n - k + 1)) * Rational(((n - k + 1) % 2 == 0) ? 1 : -1);
            sum += b[k].scaled(GaussianRational(w));
        }
        b[n + 1] = next + sum.scaled(GaussianRational(den.inverse()));
    }
    return b;
}

SeriesCoefficients seriesAtOne(const GaussianRational& lam, int N) {
    std::vector<UPoly> sym = seriesAtOneSymbolic(N);
    SeriesCoefficients out;
    out.expansionPoint = 1;
    out.normalization = Normalization::ValueOne;
    out.values.reserve(sym.size());
    for (const auto& p : sym) out.values.push_back(p.evaluate(lam));
    return out;
}

Rational recP2(long n) { return Rational(8 * n * n + 28 * n + 20); }

UPoly recP1Symbolic(long n) {
    std::vector<GaussianRational> c(3);
    c[0] = GaussianRational(Rational(-12 * n * n - 20 * n + 9));
    c[1] = GaussianRational(Rational(-8 * n - 8));
    c[2] = GaussianRational(Rational(-1));
    return UPoly(std::move(c));
}

UPoly recP0Symbolic(long n) {
    std::vector<GaussianRational> c(3);
    c[0] = GaussianRational(Rational(4 * n * n - 9));
    c[1] = GaussianRational(Rational(4 * n));
    c[2] = GaussianRational(Rational(1));
    return UPoly(std::move(c));
}

GaussianRational recP1(long n, const GaussianRational& lam) { return recP1Symbolic(n).evaluate(lam); }
GaussianRational recP0(long n, const GaussianRational& lam) { return recP0Symbolic(n).evaluate(lam); }

std::pair<GaussianRational, GaussianRational> recAnBn(long n, const GaussianRational& lam) {
    GaussianRational p2(recP2(n));
    return {recP1(n, lam) / p2, recP0(n, lam) / p2};
}

std::vector<UPoly> transformedSeriesSymbolic(int N) {
    std::vector<UPoly> c(static_cast<size_t>(N) + 1);
    if (N >= 1) c[1] = UPoly(GaussianRational(1));
    for (int n = 0; n + 2 <= N; ++n) {
        UPoly rhs = recP1Symbolic(n) * c[n + 1] + recP0Symbolic(n) * c[n];
        c[n + 2] = (-rhs).scaled(GaussianRational(recP2(n).inverse()));
    }
    return c;
}

std::vector<GaussianRational> transformedSeries(const GaussianRational& lam, int N) {
    std::vector<GaussianRational> c(static_cast<size_t>(N) + 1, GaussianRational(0));
    if (N >= 1) c[1] = GaussianRational(1);
    for (int n = 0; n + 2 <= N; ++n) {
        GaussianRational rhs = recP1(n, lam) * c[n + 1] + recP0(n, lam) * c[n];
        c[n + 2] = -rhs / GaussianRational(recP2(n));
    }
    return c;
}

std::vector<GaussianRational> ratioSequence(const GaussianRational& lam, int n0, int N) {
    std::vector<GaussianRational> c = transformedSeries(lam, N + 1);
    std::vector<GaussianRational> r;
    r.reserve(static_cast<size_t>(N - n0) + 1);
    for (int n = n0; n <= N; ++n) {
        if (c[n].isZero())
            throw std::domain_error("ratioSequence: vanishing coefficient at index " + std::to_string(n));
        r.push_back(c[n + 1] / c[n]);
    }
    return r;
}

BivarPoly weightedOdeOperator(const BivarPoly& P) {
    // (2-t)^2 t (1-t) P_tt + (2-t)^2 (-(5/2) t + lambda (1-t)) P_t
    //   + ((2-t)^2 alpha + t(4-t)) P,  alpha = -(lambda^2+3 lambda)/4 + 1/2
    BivarPoly t = BivarPoly::tPower(1);
    BivarPoly one(GaussianRational(1));
    BivarPoly twoMinusT = BivarPoly(GaussianRational(Rational(2))) - t;
    BivarPoly w = twoMinusT * twoMinusT;
    BivarPoly lam = BivarPoly::fromLambdaPoly(UPoly::variable());
    BivarPoly alpha = BivarPoly::fromLambdaPoly(UPoly(std::vector<GaussianRational>{
        GaussianRational(Rational(1, 2)), GaussianRational(Rational(-3, 4)),
        GaussianRational(Rational(-1, 4))}));
    BivarPoly firstCoeff = w * t * (one - t);
    BivarPoly secondCoeff = w * (lam * (one - t) - BivarPoly(GaussianRational(Rational(5, 2))) * t);
    BivarPoly zeroCoeff = w * alpha + t * (BivarPoly(GaussianRational(Rational(4))) - t);
    return firstCoeff * P.derivativeT().derivativeT() + secondCoeff * P.derivativeT() + zeroCoeff * P;
}

UPoly weightedOdeOperator(const UPoly& Pt, const GaussianRational& lam) {
    std::vector<UPoly> rows(Pt.coeffs().size());
    for (size_t i = 0; i < rows.size(); ++i) rows[i] = UPoly(Pt.coeffs()[i]);
    BivarPoly P{std::move(rows)};
    BivarPoly res = weightedOdeOperator(P);
    // substitute lambda
    return res.atLambda(lam);
}

}  // namespace modecert
