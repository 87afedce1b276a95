#pragma once

// Named verification suites. Each returns one Check per law it tests.

#include <string>
#include <vector>

#include "ea/arrangement.hpp"
#include "ea/vg.hpp"

namespace ea {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

const std::vector<std::string>& suite_names();  // without "all"

/// Runs one suite (or "all"); throws std::invalid_argument for unknown names.
std::vector<Check> run_suite(const std::string& suite, const Arrangement& arr,
                             HyperplaneOrder order = HyperplaneOrder::Default);

std::vector<Check> verify_tits_laws(const Arrangement& arr);
std::vector<Check> verify_saliola(const Arrangement& arr);
std::vector<Check> verify_coincidental(const Arrangement& arr, HyperplaneOrder order);
std::vector<Check> verify_all_coxeter(const Arrangement& arr, HyperplaneOrder order);
std::vector<Check> verify_vg_grading(const Arrangement& arr, HyperplaneOrder order);
std::vector<Check> verify_am_genfun(const Arrangement& arr);
std::vector<Check> verify_chu_vandermonde(const Arrangement& arr);

/// (r, g) pairs of the coincidental families up to rank 8 (I2(m) for m <= 12).
std::vector<std::pair<int, int>> coincidental_parameters();

}  // namespace ea
