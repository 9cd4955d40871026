#pragma once

#include <iosfwd>
#include <string>

#include "kmx/json_io.hpp"

namespace kmx::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitCapacity = 4;
inline constexpr int kExitReconstruct = 5;

struct Options {
    unsigned genus_max = 3;
    std::size_t cap = 0;  // 0 = per-module defaults
    bool table = false;

    std::size_t element_cap() const { return cap ? cap : kDefaultElementCap; }
    std::size_t label_cap() const { return cap ? cap : kDefaultLabelCap; }
    std::size_t equiv_cap() const { return cap ? cap : kDefaultEquivCap; }
};

/// Full analysis report for one K-matrix. Data on out, reasons on err.
int run_analyze(const Json& input, const Options& opt, std::ostream& out,
                std::ostream& err);

/// Genus-g modular data (labels, t, omega, norm) for one K-matrix.
int run_modular(const Json& input, unsigned genus, const Options& opt,
                std::ostream& out, std::ostream& err);

/// Rebuild (G, q, Omega) from {"omega": [[...]], "t": [...], "norm": {...}}.
int run_reconstruct(const Json& input, std::ostream& out, std::ostream& err);

/// Measurable-data equivalence of two K-matrices.
int run_equiv(const Json& k1, const Json& k2, const Options& opt, std::ostream& out,
              std::ostream& err);

/// Maslov indices for three or four Lagrangians, optionally scaled by a K.
int run_maslov(const Json& input, std::ostream& out, std::ostream& err);

/// Embedded golden corpus plus reduced property suites; returns kExitOk
/// iff every suite passes. Prints one line per suite with check counts.
int run_selftest(std::ostream& out);

/// Maps a library error to the documented exit code.
int exit_code_for(const Error& e);

}  // namespace kmx::cli
