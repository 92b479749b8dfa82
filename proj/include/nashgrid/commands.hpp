#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nashgrid/scenario.hpp"

namespace nashgrid {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitIo = 3;

struct CheckOptions {
    std::string scenario;  // path or bundled scenario name
    bool quiet = false;
};

struct SolveOptions {
    std::string scenario;
    bool verify = false;  // run the unilateral-deviation scan on the result
    bool quiet = false;
};

struct SimulateOptions {
    std::string scenario;
    std::string out_dir;
    bool quiet = false;
};

struct SweepOptions {
    std::string scenario;
    std::string out_dir;
    std::string param;                // delta | step_h | topology | gain_k_all
    std::vector<std::string> values;  // one run per value, executed concurrently
    bool quiet = false;
};

/// Validates a scenario and reports connectivity, Fiedler value, the
/// uniqueness-bound margin, diagonal dominance of B and definiteness of H.
int cmd_check(const CheckOptions& opts, std::ostream& out);

/// Computes the equilibrium with the oracle and prints it with active sets.
int cmd_solve(const SolveOptions& opts, std::ostream& out);

/// Runs the seeking dynamics; writes trajectory.csv and summary.json under
/// out_dir and prints the stop reason plus errors against the oracle.
int cmd_simulate(const SimulateOptions& opts, std::ostream& out);

/// One simulation per value with per-run artifacts in subdirectories and a
/// comparison table of final error and convergence time.
int cmd_sweep(const SweepOptions& opts, std::ostream& out);

}  // namespace nashgrid
