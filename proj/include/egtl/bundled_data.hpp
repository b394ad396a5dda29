#ifndef EGTL_BUNDLED_DATA_HPP
#define EGTL_BUNDLED_DATA_HPP

#include <string>
#include <vector>

namespace egtl::data {

/// Names of the datasets shipped with the library.
std::vector<std::string> bundled_names();

bool is_bundled(const std::string& name);

/// Raw text of a bundled dataset, values in the original print order.
/// Throws std::invalid_argument for unknown names.
const std::string& bundled_text(const std::string& name);

}  // namespace egtl::data

#endif
