'''
betterhelp
==========

Helptext for the bnwalls command line, built from the argparse parsers
themselves: the description, one block per argument, a preview of every
command, and the example invocations that each parser lists in its
`parser.examples` attribute, e.g.

parser.examples = [
    {'args': 'bn --g 28 --d 24 --r 5 --format json', 'comment': 'Equality case'},
]

Parse errors do not call sys.exit. ArgumentParser.error raises
exceptions.UsageError, which the application turns into exit status 64.
'''
import argparse
try:
    import colorama
except ImportError:
    colorama = None
import os
import textwrap

from bnwalls import dotdict
from bnwalls import exceptions
from bnwalls import niceprints
from bnwalls import pipeable
from bnwalls import vlogging

log = vlogging.get_logger(__name__)

# The presence of any of these in a command's argv shows its helptext.
HELP_ARGS = {'-h', '--help'}

# As the first argument, any of these shows the program helptext.
HELP_COMMANDS = {'help', '-h', '--help'}

# Modules that intercept argv (vlogging) register extra helptext here, and it
# is shown after every helptext.
HELPTEXT_EPILOGUES = set()

PROGRAM_NAME = 'bnwalls'

class ArgumentParser(argparse.ArgumentParser):
    '''
    An ArgumentParser whose errors raise UsageError instead of exiting, and
    whose own -h is disabled because betterhelp handles help before parsing.
    '''
    def __init__(self, *args, **kwargs):
        kwargs.setdefault('add_help', False)
        super().__init__(*args, **kwargs)
        self.examples = []

    def error(self, message):
        raise exceptions.UsageError(message)

# INTERNALS
################################################################################

def get_subparser_action(parser):
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action
    return None

def get_colors(do_colors):
    # Only colorize when both streams are terminals; pipes get plain text.
    if do_colors and colorama and pipeable.stdout_tty() and pipeable.stderr_tty():
        colorama.init()
        return dotdict.DotDict(
            named=colorama.Style.BRIGHT + colorama.Fore.GREEN,
            flag=colorama.Style.BRIGHT + colorama.Fore.MAGENTA,
            command=colorama.Style.BRIGHT + colorama.Fore.YELLOW,
            reset=colorama.Style.RESET_ALL,
        )
    return dotdict.DotDict(named='', flag='', command='', reset='')

def render_invocation(action, color):
    flag_types = (argparse._StoreTrueAction, argparse._StoreFalseAction, argparse._StoreConstAction)
    if isinstance(action, flag_types):
        return ', '.join(f'{color.flag}{alias}{color.reset}' for alias in action.option_strings)

    if action.metavar is not None:
        argname = action.metavar
    elif action.choices is not None:
        argname = '{' + ','.join(str(choice) for choice in action.choices) + '}'
    elif action.type is not None and hasattr(action.type, '__name__'):
        argname = action.type.__name__
    else:
        argname = action.dest
    return ', '.join(f'{color.named}{alias} {argname}{color.reset}' for alias in action.option_strings)

def make_helptext(parser, *, command_name=None, do_colors=True, do_headline=True):
    color = get_colors(do_colors)

    if command_name is None:
        header_name = PROGRAM_NAME
    else:
        header_name = f'{PROGRAM_NAME} {command_name}'

    description = textwrap.dedent(parser.description or '').strip()

    argument_helps = []
    for action in parser._actions:
        if isinstance(action, (argparse._HelpAction, argparse._SubParsersAction)):
            continue
        arghelp = []
        if action.help is not None:
            arghelp.append(textwrap.dedent(action.help).strip())
        if type(action) is argparse._StoreAction and action.default is not None:
            arghelp.append(f'Default: {action.default!r}')
        if action.required:
            arghelp.append('(*) Required')
        arghelp = textwrap.indent('\n'.join(arghelp), '    ')
        argument_helps.append(f'{render_invocation(action, color)}\n{arghelp}'.rstrip())

    command_previews = []
    subparser_action = get_subparser_action(parser)
    if subparser_action is not None:
        for (name, subparser) in subparser_action.choices.items():
            first_para = textwrap.dedent(subparser.description or '').split('\n\n')[0].strip()
            first_para = textwrap.indent(first_para, '    ')
            command_previews.append(f'{PROGRAM_NAME} {color.command}{name}{color.reset}\n{first_para}')

    if command_previews:
        commands = 'Commands\n--------\n\n' + '\n\n'.join(command_previews)
        commands += (
            '\n\nTo see details on each command, run\n'
            f'> {PROGRAM_NAME} {color.command}<command>{color.reset} {color.flag}--help{color.reset}'
        )
    else:
        commands = ''

    examples = []
    for example in getattr(parser, 'examples', []):
        if isinstance(example, str):
            example = {'args': example}
        invocation = f'> {PROGRAM_NAME} {example["args"]}'
        if example.get('comment'):
            invocation = f'# {example["comment"]}\n{invocation}'
        examples.append(invocation)
    examples = ('Examples:\n' + '\n\n'.join(examples)) if examples else ''

    parts = [
        niceprints.equals_header(header_name) if do_headline else '',
        description,
        '\n\n'.join(argument_helps),
        commands,
        examples,
    ]
    return '\n\n'.join(part.strip() for part in parts if part.strip())

def print_helptext(text) -> None:
    '''
    Print the given text to stderr, followed by the registered epilogues.
    '''
    fulltext = [text.strip()]
    epilogues = {textwrap.dedent(epi).strip() for epi in HELPTEXT_EPILOGUES}
    fulltext.extend(sorted(epilogues))
    separator = '\n' + ('-' * 80) + '\n'
    pipeable.stderr()
    pipeable.stderr(separator.join(fulltext))

# MAINS
################################################################################

def go(parser, argv):
    '''
    Show help or dispatch to the chosen command's func. Returns the exit code:
    the command's own, 0 after help that was asked for, or 64 after help shown
    because the command was missing or unknown.
    '''
    do_colors = os.environ.get('NO_COLOR', None) is None
    subparsers = get_subparser_action(parser).choices
    command = argv[0].lower() if argv else ''

    if command in HELP_COMMANDS:
        print_helptext(make_helptext(parser, do_colors=do_colors))
        return 0

    if command not in subparsers:
        print_helptext(make_helptext(parser, do_colors=do_colors))
        if command == '':
            because = 'you did not choose a command'
        else:
            because = f'"{command}" was not recognized'
        pipeable.stderr(f'\nYou are seeing the default help text because {because}.')
        return exceptions.UsageError.exit_code

    arguments = argv[1:]
    if any(arg.lower() in HELP_ARGS for arg in arguments):
        subparser = subparsers[command]
        print_helptext(make_helptext(subparser, command_name=command, do_colors=do_colors))
        return 0

    args = parser.parse_args(argv)
    log.debug('Parsed %s into %s.', argv, args)
    return args.func(args)
