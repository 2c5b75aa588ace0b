#include "liepm/ladder.hpp"

#include <string>

namespace liepm {

namespace {

// nf(x y^m) and nf(y^m x).
PBWPoly xy_power(Normalizer& nf, const Vector& x, const Vector& y, std::size_t m) {
    return nf.left_multiply(x, nf.power(y, m));
}

PBWPoly y_power_x(Normalizer& nf, const Vector& x, const Vector& y, std::size_t m) {
    PBWPoly acc = nf.power(x, 1);
    for (std::size_t i = 0; i < m; ++i) {
        acc = nf.left_multiply(y, acc);
    }
    return acc;
}

}  // namespace

PBWSpan uk_subspace(Normalizer& nf, const Vector& x, const Vector& y, std::size_t k) {
    PBWSpan span;
    for (std::size_t m = 0; m <= k; ++m) {
        span.insert(xy_power(nf, x, y, m).terms());
        span.insert(y_power_x(nf, x, y, m).terms());
    }
    return span;
}

PBWSpan uk_subspace(const LieAlgebra& L, const Vector& x, const Vector& y, std::size_t k) {
    Normalizer nf(L);
    return uk_subspace(nf, x, y, k);
}

PBWPoly ak_correction(Normalizer& nf, const Vector& x, const Vector& y, std::size_t k) {
    const Scalar kk(static_cast<unsigned long>(k));
    const PBWPoly yxyk = nf.left_multiply(y, nf.left_multiply(x, nf.power(y, k)));
    return yxyk - (kk / (kk + 1)) * xy_power(nf, x, y, k + 1) - (1 / (kk + 1)) * y_power_x(nf, x, y, k + 1);
}

PBWPoly bk_correction(Normalizer& nf, const Vector& x, const Vector& y, std::size_t k) {
    const Scalar kk(static_cast<unsigned long>(k));
    PBWPoly ykxy = nf.left_multiply(x, nf.power(y, 1));
    for (std::size_t i = 0; i < k; ++i) {
        ykxy = nf.left_multiply(y, ykxy);
    }
    return ykxy - (1 / (kk + 1)) * xy_power(nf, x, y, k + 1) - (kk / (kk + 1)) * y_power_x(nf, x, y, k + 1);
}

Certificate check_ak_bk(const LieAlgebra& L, const Vector& x, const Vector& y, std::size_t k_max) {
    Certificate cert;
    cert.check = "ak_bk";
    ScopedTimer timer(cert);
    cert.degree = static_cast<unsigned>(k_max + 2);
    cert.details["k_max"] = std::to_string(k_max);
    cert.details["x"] = L.format(x);
    cert.details["y"] = L.format(y);

    Normalizer nf(L);
    bool ok = true;
    bool filtered_ok = true;
    auto fail = [&](const std::string& w) {
        if (ok) {
            cert.witnesses.push_back(w);
        }
        ok = false;
    };

    PBWSpan current = uk_subspace(nf, x, y, 0);
    for (std::size_t k = 0; k <= k_max; ++k) {
        PBWSpan next = uk_subspace(nf, x, y, k + 1);
        const std::string tag = std::to_string(k);

        const PBWPoly a = ak_correction(nf, x, y, k);
        const PBWPoly b = bk_correction(nf, x, y, k);
        cert.details["A_" + tag + " correction"] = format(L, a);
        cert.details["B_" + tag + " correction"] = format(L, b);
        filtered_ok = filtered_ok && a.degree() <= k && b.degree() <= k;

        const bool a_in = current.contains(a.terms());
        const bool b_in = current.contains(b.terms());
        if (!a_in) {
            fail("A_" + tag + ": correction " + format(L, a) + " is not in U_" + tag);
        }
        if (!b_in) {
            fail("B_" + tag + ": correction " + format(L, b) + " is not in U_" + tag);
        }

        // C_k on the generators of U_k.
        bool c_ok = true;
        for (std::size_t m = 0; m <= k && c_ok; ++m) {
            const PBWPoly gx = xy_power(nf, x, y, m);
            const PBWPoly gy = y_power_x(nf, x, y, m);
            const PBWPoly products[] = {nf.left_multiply(y, gx), nf.left_multiply(y, gy),
                                        nf.multiply(gx, nf.power(y, 1)), nf.multiply(gy, nf.power(y, 1))};
            for (const auto& p : products) {
                if (!next.contains(p.terms())) {
                    c_ok = false;
                    fail("C_" + tag + ": " + format(L, p) + " is not in U_" + std::to_string(k + 1));
                    break;
                }
            }
        }
        cert.details["U_" + tag + " rank"] = std::to_string(current.rank());
        cert.details["k=" + tag] = std::string(a_in ? "A ok" : "A fails") + ", " + (b_in ? "B ok" : "B fails") +
                                   ", " + (c_ok ? "C ok" : "C fails");
        current = std::move(next);
    }
    cert.details["corrections_within_filtration_degree_k"] = filtered_ok ? "yes" : "no";
    cert.verdict = ok;
    return cert;
}

}  // namespace liepm
