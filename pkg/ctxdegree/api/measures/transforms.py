"""Outcome recodings and input relabelings of a system.

Both leave every measure unchanged; they are used to state the invariance properties of the measures.
"""
from ctxdegree import exceptions
from ctxdegree.constants import systems as systems_constants

RELABELINGS = {
    systems_constants.KIND_BELL: {
        'alpha': {'ab11': 'ab21', 'ab12': 'ab22', 'a11': 'a21', 'a12': 'a22', 'b11': 'b21', 'b12': 'b22'},
        'beta': {'ab11': 'ab12', 'ab21': 'ab22', 'a11': 'a12', 'a21': 'a22', 'b11': 'b12', 'b21': 'b22'},
    },
    systems_constants.KIND_LG: {
        'yz': {'xy': 'xz', 'x12': 'x13', 'y12': 'z13', 'y23': 'z23'},
        'xy': {'xz': 'yz', 'x13': 'y23', 'z13': 'z23', 'x12': 'y12'},
    },
}


def recode(obs, variables):
    """Swap the two outcomes of the given variables.

    Each listed variable has its single negated, and each observed product is negated once per listed member.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.BellObservables | ctxdegree.core.LGObservables
    :param variables: Variable names such as "A11".
    :type variables: list[str]
    :return: The recoded observables.
    """
    variables = set(variables)
    unknown = variables - set(obs.descriptor.variables)
    if unknown:
        raise exceptions.ParamValidationError('unknown variables {0}'.format(', '.join(sorted(unknown))))
    values = obs.coordinates()
    for variable in variables:
        values[variable.lower()] = -values[variable.lower()]
    for pair in obs.descriptor.observed_pairs:
        flips = sum(1 for variable in pair.variables if variable in variables)
        if flips % 2:
            values[pair.name] = -values[pair.name]
    return type(obs)(**values)


def recode_input(obs, variable_prefix, index=None):
    """Recode every variable that measures one quantity.

    Bell: ("A", i) recodes A_i1 and A_i2, ("B", j) recodes B_1j and B_2j. LG: ("Y",) recodes Y12 and Y23.
    """
    if obs.descriptor.kind == systems_constants.KIND_BELL:
        position = 1 if variable_prefix == 'A' else 2
        variables = [v for v in obs.descriptor.variables if v[0] == variable_prefix and v[position] == str(index)]
    else:
        variables = [v for v in obs.descriptor.variables if v[0] == variable_prefix]
    if not variables:
        raise exceptions.ParamValidationError('no variables for {0}{1}'.format(variable_prefix, index or ''))
    return recode(obs, variables)


def relabel_inputs(obs, which=None):
    """Exchange two input values consistently across contexts.

    :param obs: Observed expectations.
    :type obs: ctxdegree.core.BellObservables | ctxdegree.core.LGObservables
    :param which: Bell: "alpha" swaps contexts (1, j) and (2, j), "beta" swaps (i, 1) and (i, 2). LG: "yz" exchanges
        the roles of Y and Z, "xy" those of X and Y. Defaults to the first listed relabeling.
    :type which: str
    :return: The relabeled observables.
    """
    relabelings = RELABELINGS[obs.descriptor.kind]
    if which is None:
        which = sorted(relabelings)[0]
    if which not in relabelings:
        raise exceptions.ParamValidationError('invalid relabeling "{0}", supported: {1}'.format(
            which,
            ', '.join(sorted(relabelings)),
        ))
    mapping = dict(relabelings[which])
    mapping.update({target: source for source, target in relabelings[which].items()})
    values = obs.coordinates()
    return type(obs)(**{mapping.get(name, name): value for name, value in values.items()})
