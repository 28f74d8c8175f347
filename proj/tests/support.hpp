#pragma once

#include "tauseq/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace testing {

struct Example {
    tauseq::QuiverPresentation quiver;
    tauseq::AlgebraPtr algebra;
    std::vector<tauseq::NamedModule> fixtures;

    [[nodiscard]] const tauseq::FdModule& operator[](const std::string& name) const {
        for (const auto& f : fixtures)
            if (f.name == name) return f.module;
        throw std::out_of_range("no fixture " + name);
    }
};

inline Example load_example(int n) {
    const std::string base = std::string(TAUSEQ_DATA_DIR) + "/ex" + std::to_string(n);
    auto [q, a] = tauseq::load_algebra(base + ".alg");
    auto fx = tauseq::load_fixtures(base + ".mod", q, a);
    return {std::move(q), std::move(a), std::move(fx)};
}

// Loaded once per process; the examples are immutable.
inline const Example& example(int n) {
    static const Example ex[3] = {load_example(1), load_example(2), load_example(3)};
    return ex[n - 1];
}

}  // namespace testing
