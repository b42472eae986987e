#pragma once

#include <string>
#include <vector>

#include "dtor/cone.hpp"

namespace dtor {

// A fan, stored closed under faces and sorted canonically.
class Fan {
public:
    Fan() = default;
    // closes the given cones under taking faces
    Fan(int n, const std::vector<Cone>& cones);
    static Fan faces_of(const Cone& c) { return Fan(c.ambient(), {c}); }

    int ambient() const { return n_; }
    const std::vector<Cone>& cones() const { return cones_; }
    // cones that are not proper faces of another cone
    std::vector<Cone> maximal() const;
    size_t size() const { return cones_.size(); }
    bool contains(const Cone& c) const;
    // a cone of the fan containing x in its relative interior
    const Cone* locate(const QVec& x) const;
    bool operator==(const Fan& o) const { return n_ == o.n_ && cones_ == o.cones_; }

private:
    int n_ = 0;
    std::vector<Cone> cones_;
};

// Checks face closure and that maximal cones meet in common faces.
bool fan_validate(const Fan& f, std::string* why = nullptr);
// fine subdivides coarse: every cone of fine lies in a cone of coarse and the supports agree.
bool is_subdivision(const Fan& fine, const Fan& coarse);
Fan join(const Fan& a, const Fan& b);
// Stellar refinement until every cone is regular (ambient dimension <= 4).
Fan regular_refine(const Fan& f);

}  // namespace dtor
