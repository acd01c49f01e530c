#include "avdc/cocompletion.hpp"
