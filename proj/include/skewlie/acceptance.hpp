#pragma once

// Built-in acceptance suite: nine exact checks, one result line each.

#include "skewlie/io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace skewlie {

struct AcceptanceResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::string detail;   // counts on success, the first failing case otherwise
    double seconds = 0;
};

struct AcceptanceOptions {
    bool quick = false;         // caps every form and algebra ambient dimension at 8
    bool inject_fault = false;  // tampers structure constants before the axiom check
};

std::vector<AcceptanceResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out);

// Forms used by the biconditional check; exposed so tests can reuse them.
struct CatalogueForm {
    std::string name;
    std::vector<PlantedBlock> blocks;
};
std::vector<CatalogueForm> acceptance_catalogue();

}  // namespace skewlie
