#ifndef ADEHILB_IDEAL_IO_HPP
#define ADEHILB_IDEAL_IO_HPP

#include <adehilb/groebner.hpp>
#include <string>

namespace adehilb {

/// Ideal files: {"variables": [...], "relations": [...], "generators": [...]}
/// with polynomial strings in the toolkit grammar.
IdealPresentation ideal_from_json(const std::string& json_text);
IdealPresentation ideal_from_file(const std::string& path);
std::string ideal_to_json(const IdealPresentation& i);

} // namespace adehilb

#endif
