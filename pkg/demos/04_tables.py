"""Regenerating both counting tables in several output formats."""

from cdgraph.tables import Table1Row, load, render, table1, table2

rows = table1()
print(render(rows, "plain"))

# Table 2 with digit grouping, as a markdown table.
print(render(table2(), "markdown", thousands=True))

# Extend Table 2 past the printed ten rows.
print(render(table2(14)[10:], "csv"))

# JSON keeps the big orders as strings; loading gives the rows back.
text = render(table1([10**50, 10**75]), "json")
print(text)
assert load(text, "json", Table1Row) == table1([10**50, 10**75])
