import setuptools

setuptools.setup(
    name='bnwalls',
    packages=setuptools.find_packages(exclude=['tests']),
    version='0.1.0',
    author='voussoir',
    author_email='pypi@voussoir.net',
    description='Brill-Noether loci on abelian surfaces, decided through walls in the Mukai lattice',
    long_description=open('README.md', 'r', encoding='utf-8').read(),
    long_description_content_type='text/markdown',
    python_requires='>=3.8',
    install_requires=[
        'pyperclip',
    ],
    extras_require={
        'color': ['colorama'],
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': [
            'bnwalls=bnwalls.cli:console_entry',
        ],
    },
)
