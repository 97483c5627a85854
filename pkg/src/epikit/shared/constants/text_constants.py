SHORT_STRING_MAX_LENGTH = 256
SIGNIFICANT_DIGITS = 17
FLOAT_FORMAT = f"%.{SIGNIFICANT_DIGITS}g"
CSV_LINE_TERMINATOR = "\n"
