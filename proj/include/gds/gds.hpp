#pragma once

#include "gds/error.hpp"
#include "gds/rational.hpp"
#include "gds/family.hpp"
#include "gds/linalg.hpp"
#include "gds/graph.hpp"
#include "gds/extremality.hpp"
#include "gds/oracle.hpp"
#include "gds/extension.hpp"
#include "gds/random.hpp"
#include "gds/instances.hpp"
