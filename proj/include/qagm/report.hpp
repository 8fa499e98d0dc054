#ifndef QAGM_REPORT_HPP
#define QAGM_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qagm/scalar.hpp"

namespace qagm {

struct ResidualCheck {
    std::string id;
    Cplx lhs = 0.0, rhs = 0.0;
    Real tol = 0.0;

    Real residual() const { return std::abs(lhs - rhs); }
    bool pass() const { return residual() <= tol; }
};

/// A named batch of lhs-vs-rhs comparisons with per-check tolerances.
struct ResidualReport {
    std::string suite;
    std::vector<ResidualCheck> checks;

    void add(std::string id, Cplx lhs, Cplx rhs, Real tol) {
        checks.push_back({std::move(id), lhs, rhs, tol});
    }

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }

    Real max_residual() const {
        Real m = 0.0;
        for (const auto& c : checks) m = std::max(m, c.residual());
        return m;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            j["checks"].push_back({{"id", c.id},
                                   {"lhs_re", c.lhs.real()},
                                   {"lhs_im", c.lhs.imag()},
                                   {"rhs_re", c.rhs.real()},
                                   {"rhs_im", c.rhs.imag()},
                                   {"residual", c.residual()},
                                   {"tol", c.tol},
                                   {"pass", c.pass()}});
        }
        j["pass"] = pass();
        return j;
    }
};

} // namespace qagm

#endif
