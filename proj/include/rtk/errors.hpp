#pragma once

#include <stdexcept>
#include <string>

namespace rtk {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define RTK_ERROR_TYPE(name)                  \
  struct name : error {                       \
    using error::error;                       \
  }

RTK_ERROR_TYPE(invalid_rank);
RTK_ERROR_TYPE(index_out_of_range);
RTK_ERROR_TYPE(not_dominant);
RTK_ERROR_TYPE(not_p_restricted);
RTK_ERROR_TYPE(not_self_dual);
RTK_ERROR_TYPE(unknown_rule);
RTK_ERROR_TYPE(malformed_params);
RTK_ERROR_TYPE(not_a_table2_row);
RTK_ERROR_TYPE(out_of_table_domain);
RTK_ERROR_TYPE(unsupported_charp_dimension);
RTK_ERROR_TYPE(char_zero);
RTK_ERROR_TYPE(invalid_case);
RTK_ERROR_TYPE(invalid_basis);
RTK_ERROR_TYPE(malformed_element);
RTK_ERROR_TYPE(missing_stated_multiplicity);
RTK_ERROR_TYPE(schema_mismatch);
RTK_ERROR_TYPE(parse_error);
RTK_ERROR_TYPE(unsupported);

#undef RTK_ERROR_TYPE

}  // namespace rtk
