#pragma once

#include "mws/diagram.hpp"
#include "mws/evaluate.hpp"
#include "mws/graphs.hpp"
#include "mws/magnus.hpp"
#include "mws/oracle.hpp"
#include "mws/stringlink.hpp"
#include "mws/weights.hpp"
