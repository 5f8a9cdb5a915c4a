#ifndef NLTORIC_CATALOG_HPP
#define NLTORIC_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "nltoric/nl.hpp"

namespace nltoric {

// A catalog entry bundles a fan with its designated bases and the expected
// values its loader asserts, so a wrong encoding cannot pass silently.
struct CatalogEntry {
    std::string name;
    Fan fan;
    ClassGroup cg;
    std::vector<DivisorClass> nef_basis;  // designated reporting basis
    DivisorClass eta;                     // designated ample class
    DivisorClass beta0;

    // reference values (ids appear in verification output)
    int picard_rank = 0;
    std::vector<Int> beta0_basis_coords;
    bool eta_zero_regular = false;
    bool eta_minus_one_regular = false;
    std::vector<std::vector<Rat>> line_classes;  // pairings against nef_basis
    std::optional<Int> hilb_dim_override;        // singular-locus line classes
    std::optional<std::pair<Int, Int>> exceptional_normal_bundle;
};

std::vector<std::string> catalog_names();
CatalogEntry load_catalog(const std::string& name);

struct CheckResult {
    std::string id;  // e.g. "reference:blowup-p3-line:intersection-table"
    bool pass = false;
    std::string expected, actual;
};

// Every catalog-level reference expectation for one entry.
std::vector<CheckResult> verify_catalog_entry(const CatalogEntry& entry);

struct ClassificationRow {
    std::string entry;
    bool has_zero_regular_ample = false;
    bool has_minus_one_regular_ample = false;
    std::vector<std::vector<Int>> zero_regular_witnesses;       // Picard-nef coords
    std::vector<std::vector<Int>> minus_one_regular_witnesses;
};

// Scan primitive ample classes with Picard-nef coordinates up to the bound
// for 0- and (-1)-regularity. A window verification, not a proof.
std::vector<ClassificationRow> catalog_classification(const std::vector<CatalogEntry>& entries,
                                                      int bound);

}  // namespace nltoric

#endif
