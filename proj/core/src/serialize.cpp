#include "avdc/serialize.hpp"
