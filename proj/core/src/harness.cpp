#include "avdc/harness.hpp"
