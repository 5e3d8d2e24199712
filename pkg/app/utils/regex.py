REGEX_RATIONAL: str = r"^(?P<numerator>[+-]?\d+)(/(?P<denominator>\d+))?$"
REGEX_DEGREE_KEY: str = r"^(?P<i>0|-?[1-9]\d*),(?P<j>0|-?[1-9]\d*)$"
REGEX_WINDOW: str = r"^(?P<alpha>-?\d+),(?P<beta>-?\d+)(,(?P<gamma>-?\d+),(?P<delta>-?\d+))?$"
REGEX_GENERATOR: str = r"^\((?P<degree>-?\d+(,-?\d+)?)\)(\*(?P<multiplicity>\d+))?$"
