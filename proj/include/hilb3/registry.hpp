#pragma once

#include "hilb3/chow.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hilb3 {

class LookupError : public std::out_of_range {
public:
    LookupError(const std::string& what, std::vector<std::string> near)
        : std::out_of_range(what), near_(std::move(near)) {}
    const std::vector<std::string>& near_matches() const { return near_; }

private:
    std::vector<std::string> near_;
};

struct RegistryEntry {
    std::string id;
    GradedClass value;
    std::string note;
};

// Named classes with their multiples kept exactly as catalogued.
const std::vector<RegistryEntry>& registry();

// Accepts registry ids, basis names and cone members written "Eff2.3" (1-based).
GradedClass registry_lookup(std::string_view id);

struct ConeFixture {
    std::string id;
    int codim;
    std::vector<GradedClass> generators;
    std::string note;
};

// Eff2, Nef2, Eff3, Nef3, Pl2, Pl3, Pl4, and EffKnown2 (effective codim-2 classes).
const std::vector<ConeFixture>& cone_fixtures();
const ConeFixture& cone_fixture(std::string_view id);

}  // namespace hilb3
