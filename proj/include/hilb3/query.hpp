#pragma once

#include "hilb3/chow.hpp"

#include <optional>
#include <string>

namespace hilb3 {

// Either a product value fixed by the available constraints, or a witness
// functional showing that the constraints leave it free.
class ProductQueryResult {
public:
    static ProductQueryResult determined(GradedClass value) {
        ProductQueryResult r;
        r.value_ = std::move(value);
        return r;
    }
    static ProductQueryResult undetermined(Vec witness, std::string reason) {
        ProductQueryResult r;
        r.witness_ = std::move(witness);
        r.reason_ = std::move(reason);
        return r;
    }

    bool is_determined() const { return value_.has_value(); }
    const GradedClass& value() const {
        if (!value_) throw std::logic_error("product is undetermined: " + reason_);
        return *value_;
    }
    const Vec& witness() const { return witness_; }
    const std::string& reason() const { return reason_; }

private:
    ProductQueryResult() = default;
    std::optional<GradedClass> value_;
    Vec witness_;
    std::string reason_;
};

}  // namespace hilb3
