#ifndef ABREC_ERRORS_HPP
#define ABREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abrec {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An element vector has the wrong arity or encodes a residue outside the group.
struct invalid_element_error : error {
    using error::error;
};

// A subgroup was used with a group other than its ambient.
struct ambient_mismatch_error : error {
    using error::error;
};

// Two homomorphisms were combined but their targets differ.
struct target_mismatch_error : error {
    using error::error;
};

struct not_prime_error : error {
    using error::error;
};

// A field spec was passed where a normalized one is required.
struct non_normalized_error : error {
    using error::error;
};

// Local data truncated at a level too small for the field it describes.
struct level_error : error {
    using error::error;
};

// An oracle packet is internally inconsistent.
struct oracle_corruption_error : error {
    using error::error;
};

// A serialized document violates the wire schema.
struct schema_error : error {
    using error::error;
};

struct degree_cap_error : error {
    using error::error;
};

// The prime divides the discriminant of the polynomial under test.
struct ramified_prime_error : error {
    using error::error;
};

} // namespace abrec

#endif
