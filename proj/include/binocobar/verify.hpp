#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "binocobar/report.hpp"

namespace binocobar {

/* Seeded property suites behind the `verify` subcommand. Every trial
 * derives its own seed from (master seed, trial index), so reports are
 * reproducible case by case no matter how the trials are scheduled. */
CheckReport verify_numpoly(std::uint64_t seed, int trials);
CheckReport verify_hopf(std::uint64_t seed, int trials);
CheckReport verify_modl(std::uint64_t seed, int trials);
CheckReport verify_cobar(std::uint64_t seed, int trials);
CheckReport verify_fgl(std::uint64_t seed, int trials);

// which: all | numpoly | hopf | modl | cobar | fgl
std::vector<CheckReport> verify_suites(const std::string& which, std::uint64_t seed, int trials);

} // namespace binocobar
