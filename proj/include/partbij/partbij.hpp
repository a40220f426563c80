#pragma once

#include "bijections.hpp"
#include "bitmatrix.hpp"
#include "identities.hpp"
#include "partition.hpp"
