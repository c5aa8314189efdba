// Acceptance suite entry point: runs every criterion and prints one
// pass/fail line each. The same runner backs `ncrat selftest`.
#include <iostream>

#include "ncrat/selftest.hpp"

int main() {
    auto results = ncrat::selftest::run_acceptance(&std::cout);
    return ncrat::selftest::all_passed(results) ? 0 : 1;
}
