#pragma once

#define GBD_VERSION_STRING "0.1.0"
