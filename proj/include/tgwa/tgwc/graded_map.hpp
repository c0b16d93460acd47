#pragma once

#include "tgwa/tgwc/construction.hpp"

namespace tgwa {

// X_i^+ -> plus[i] X_i^+, X_i^- -> minus[i] X_i^-, r -> ring(r).
struct GradedImages {
  std::vector<Ratfun> plus;
  std::vector<Ratfun> minus;
  RingMap ring;
};

GradedImages identity_images(const Tgwd& d);

// Applies the images to an element, term by term.
TgwcElement apply_graded(const Construction& c, const GradedImages& g, const TgwcElement& e);

// Maps every defining relation of C_mu(R, sigma, t) and reduces it; passes iff all
// images vanish.
CheckReport verify_graded_endomorphism(const Construction& c, const GradedImages& g);

}  // namespace tgwa
