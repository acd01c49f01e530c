#include "avdc/monoidal.hpp"
