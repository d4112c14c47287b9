#pragma once

#include "opinion/config.hpp"

namespace opinion::commands {

// Subcommand entry points. Each validates, pre-flights the output
// directory, computes, then writes all files at once. Errors surface as
// ValidationError / IoError; the CLI maps them to exit codes.

void run_stats(const RunConfig& cfg);
void run_prune(const RunConfig& cfg);
void run_generate(const RunConfig& cfg);
void run_simulate(const RunConfig& cfg);
void run_sweep(const RunConfig& cfg);

}  // namespace opinion::commands
