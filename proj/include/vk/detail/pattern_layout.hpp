#pragma once

#include "vk/gauss_code.hpp"

namespace vk::detail {

// Combinatorial layout of the Livingston pattern transcription. The bundle
// meeting orders at a crossing follow from the cross-section geometry: an
// over-side sheet meets the under bundle in descending offset order at a
// positive crossing and ascending at a negative one, the under side the
// other way round, and the backward sheet sees either order reversed.
// offset_of_sheet places core / finger-out / finger-back in the bundle
// cross-section; the remaining fields fix the over/sign choices at the
// basepoint site. The defaults are the pinned transcription used by
// livingston_satellite; the hook exists so the pinning tests can show the
// choice is forced. Not a stable interface.
struct PatternLayout {
    int offset_of_sheet[3] = {1, 2, 3};
    bool meets_flipped = false;
    bool connector_core_over = false;
    int connector_sign = 1;
    int clasp_sign = 1;
    bool clasp_out_over = false;
    bool clasp_on_return = true;
    bool target_meets_out_first = false;
    bool connector_crossing_last = true;
};

KnotCode cable_satellite(const KnotCode& code, const PatternLayout& layout);

}  // namespace vk::detail
