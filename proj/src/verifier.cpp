#include "ybe/types.hpp"

namespace ybe {
}
