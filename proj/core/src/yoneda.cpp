#include "avdc/yoneda.hpp"
